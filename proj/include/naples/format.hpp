#pragma once

#include <string>
#include <utility>
#include <vector>

#include "naples/enumeration.hpp"
#include "naples/qstats.hpp"
#include "naples/types.hpp"

namespace naples {

enum class OutputFormat { Json, Csv, Latex };

OutputFormat parse_output_format(const std::string& name);

/// Minimal JSON document builder with insertion-ordered keys. Integers are
/// emitted as raw decimal number tokens, so arbitrary-precision values stay
/// exact (JSON places no bound on number precision).
class JsonValue {
 public:
  static JsonValue number(const BigInt& value);
  static JsonValue number(long long value);
  static JsonValue string(std::string value);
  static JsonValue boolean(bool value);
  static JsonValue array(std::vector<JsonValue> items = {});
  static JsonValue object();

  JsonValue& add(const std::string& key, JsonValue value);   // object member
  JsonValue& push_back(JsonValue value);                     // array element

  /// Compact single-line serialization.
  std::string str() const;

 private:
  enum class Kind { Number, String, Bool, Array, Object };
  JsonValue() = default;

  Kind kind_ = Kind::Object;
  std::string scalar_;  // number token or string payload
  bool bool_ = false;
  std::vector<JsonValue> items_;
  std::vector<std::pair<std::string, JsonValue>> members_;
};

std::string json_escape(const std::string& raw);

/// "23514" for n <= 9, "10,2,7,..." beyond.
std::string sequence_to_string(const std::vector<int>& values);

/// Parses both compact digit strings and comma-separated lists.
std::vector<int> parse_sequence(const std::string& text);

/// Polynomial in the descending-exponent style of the reference tables:
/// "2q^3+7q^2+9q+6", braces on multi-digit exponents, "0" when zero.
std::string latex_polynomial(const QPolynomial& poly);

/// Series by ascending index: "q + 3q^2 + q^3 + q^6" with coefficients of 1
/// suppressed on nonconstant terms.
std::string latex_series(const IndexedSeries& series);

JsonValue series_to_json(const IndexedSeries& series);
JsonValue polynomial_to_json(const QPolynomial& poly);
std::string series_to_csv(const IndexedSeries& series);
std::string polynomial_to_csv(const QPolynomial& poly);

}  // namespace naples
