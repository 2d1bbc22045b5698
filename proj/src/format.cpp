#include "naples/format.hpp"

#include <cstdio>
#include <sstream>
#include <stdexcept>

namespace naples {

OutputFormat parse_output_format(const std::string& name) {
  if (name == "json") return OutputFormat::Json;
  if (name == "csv") return OutputFormat::Csv;
  if (name == "latex") return OutputFormat::Latex;
  throw std::invalid_argument("unknown output format: " + name);
}

JsonValue JsonValue::number(const BigInt& value) {
  JsonValue v;
  v.kind_ = Kind::Number;
  v.scalar_ = value.str();
  return v;
}

JsonValue JsonValue::number(long long value) { return number(BigInt(value)); }

JsonValue JsonValue::string(std::string value) {
  JsonValue v;
  v.kind_ = Kind::String;
  v.scalar_ = std::move(value);
  return v;
}

JsonValue JsonValue::boolean(bool value) {
  JsonValue v;
  v.kind_ = Kind::Bool;
  v.bool_ = value;
  return v;
}

JsonValue JsonValue::array(std::vector<JsonValue> items) {
  JsonValue v;
  v.kind_ = Kind::Array;
  v.items_ = std::move(items);
  return v;
}

JsonValue JsonValue::object() {
  JsonValue v;
  v.kind_ = Kind::Object;
  return v;
}

JsonValue& JsonValue::add(const std::string& key, JsonValue value) {
  members_.emplace_back(key, std::move(value));
  return *this;
}

JsonValue& JsonValue::push_back(JsonValue value) {
  items_.push_back(std::move(value));
  return *this;
}

std::string json_escape(const std::string& raw) {
  std::string out;
  out.reserve(raw.size());
  for (char c : raw) {
    switch (c) {
      case '"': out += "\\\""; break;
      case '\\': out += "\\\\"; break;
      case '\n': out += "\\n"; break;
      case '\r': out += "\\r"; break;
      case '\t': out += "\\t"; break;
      default:
        if (static_cast<unsigned char>(c) < 0x20) {
          char buf[8];
          std::snprintf(buf, sizeof(buf), "\\u%04x", c);
          out += buf;
        } else {
          out += c;
        }
    }
  }
  return out;
}

std::string JsonValue::str() const {
  std::ostringstream os;
  switch (kind_) {
    case Kind::Number:
      os << scalar_;
      break;
    case Kind::String:
      os << '"' << json_escape(scalar_) << '"';
      break;
    case Kind::Bool:
      os << (bool_ ? "true" : "false");
      break;
    case Kind::Array: {
      os << '[';
      for (size_t i = 0; i < items_.size(); ++i) {
        if (i > 0) os << ',';
        os << items_[i].str();
      }
      os << ']';
      break;
    }
    case Kind::Object: {
      os << '{';
      for (size_t i = 0; i < members_.size(); ++i) {
        if (i > 0) os << ',';
        os << '"' << json_escape(members_[i].first) << "\":" << members_[i].second.str();
      }
      os << '}';
      break;
    }
  }
  return os.str();
}

std::string sequence_to_string(const std::vector<int>& values) {
  std::ostringstream os;
  const bool compact = values.size() <= 9;
  for (size_t i = 0; i < values.size(); ++i) {
    if (!compact && i > 0) os << ',';
    os << values[i];
  }
  return os.str();
}

std::vector<int> parse_sequence(const std::string& text) {
  std::vector<int> values;
  if (text.empty()) throw std::invalid_argument("empty sequence");
  if (text.find(',') != std::string::npos) {
    std::istringstream is(text);
    std::string item;
    while (std::getline(is, item, ',')) {
      size_t used = 0;
      const int v = std::stoi(item, &used);
      if (used != item.size()) throw std::invalid_argument("bad sequence entry: " + item);
      values.push_back(v);
    }
  } else {
    for (char c : text) {
      if (c < '1' || c > '9') {
        throw std::invalid_argument("compact sequences use digits 1-9; use commas otherwise");
      }
      values.push_back(c - '0');
    }
  }
  return values;
}

namespace {

// One monomial c q^e, with the conventions of the reference tables:
// unit coefficients suppressed except on the constant term, exponent 1 bare,
// multi-digit exponents braced.
void append_term(std::ostringstream& os, const BigInt& coeff, const BigInt& exponent) {
  if (!(coeff == 1 && exponent > 0)) os << coeff.str();
  if (exponent == 1) {
    os << 'q';
  } else if (exponent > 1) {
    os << "q^";
    if (exponent > 9) {
      os << '{' << exponent.str() << '}';
    } else {
      os << exponent.str();
    }
  }
}

}  // namespace

std::string latex_polynomial(const QPolynomial& poly) {
  if (poly.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int e = poly.degree(); e >= 0; --e) {
    const BigInt c = poly.coefficient(e);
    if (c == 0) continue;
    if (!first) os << '+';
    first = false;
    append_term(os, c, e);
  }
  return os.str();
}

std::string latex_series(const IndexedSeries& series) {
  if (series.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [index, coeff] : series.terms()) {
    if (!first) os << " + ";
    first = false;
    append_term(os, coeff, index);
  }
  return os.str();
}

JsonValue series_to_json(const IndexedSeries& series) {
  JsonValue terms = JsonValue::array();
  for (const auto& [index, coeff] : series.terms()) {
    terms.push_back(JsonValue::object()
                        .add("index", JsonValue::number(index))
                        .add("coeff", JsonValue::number(coeff)));
  }
  return terms;
}

JsonValue polynomial_to_json(const QPolynomial& poly) {
  JsonValue coeffs = JsonValue::array();
  for (int e = 0; e <= poly.degree(); ++e) {
    coeffs.push_back(JsonValue::number(poly.coefficient(e)));
  }
  return JsonValue::object().add("coeffs", coeffs);
}

std::string series_to_csv(const IndexedSeries& series) {
  std::ostringstream os;
  os << "index,coefficient\n";
  for (const auto& [index, coeff] : series.terms()) {
    os << index.str() << ',' << coeff.str() << '\n';
  }
  return os.str();
}

std::string polynomial_to_csv(const QPolynomial& poly) {
  std::ostringstream os;
  os << "exponent,coefficient\n";
  for (int e = 0; e <= poly.degree(); ++e) {
    os << e << ',' << poly.coefficient(e).str() << '\n';
  }
  return os.str();
}

}  // namespace naples
