#pragma once

#include <cctype>
#include <cstdio>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "sturmian/continued_fraction.hpp"
#include "sturmian/errors.hpp"
#include "sturmian/field_element.hpp"

namespace sturmian {

// Text forms, round-trip stable:
//   field elements   "p", "p/q", "0.25", "(a+b*sqrt(d))/c" and sign/omission
//                    variants like "sqrt(2)", "2-sqrt(2)", "(-1+sqrt(5))/2"
//   continued fractions   "[0;a1,a2,...]" with an optional trailing
//                    parenthesized period "[0;a1,(b1,b2)]"; the period marks
//                    the expansion as infinite, nothing is guessed from
//                    floats.

namespace detail {

inline void strip_spaces(std::string& s) {
  std::string out;
  for (char ch : s)
    if (!std::isspace(static_cast<unsigned char>(ch))) out.push_back(ch);
  s = std::move(out);
}

inline bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char ch : s)
    if (!std::isdigit(static_cast<unsigned char>(ch))) return false;
  return true;
}

inline Int parse_int(std::string_view s, const char* what) {
  bool negative = false;
  if (!s.empty() && (s[0] == '+' || s[0] == '-')) {
    negative = s[0] == '-';
    s.remove_prefix(1);
  }
  if (!all_digits(s)) throw ParseError(std::string("expected an integer in ") + what);
  Int v{std::string(s)};
  return negative ? -v : v;
}

// One summand: "12", "0.75", "sqrt(5)", "3*sqrt(5)".
inline FieldElement parse_term(std::string_view term) {
  const auto star = term.find('*');
  std::string_view coeff_part = star == std::string_view::npos ? std::string_view() : term.substr(0, star);
  std::string_view rest = star == std::string_view::npos ? term : term.substr(star + 1);
  if (rest.starts_with("sqrt(") && rest.ends_with(")")) {
    const Int d = parse_int(rest.substr(5, rest.size() - 6), "sqrt radicand");
    if (d < 0) throw ParseError("negative radicand");
    const Int coeff = coeff_part.empty() ? Int(1) : parse_int(coeff_part, "sqrt coefficient");
    return FieldElement::quadratic(0, coeff, d, 1);
  }
  if (star != std::string_view::npos) throw ParseError("'*' outside a sqrt term");
  const auto dot = term.find('.');
  if (dot != std::string_view::npos) {
    const std::string_view whole = term.substr(0, dot);
    const std::string_view frac = term.substr(dot + 1);
    if (!all_digits(frac)) throw ParseError("malformed decimal fraction");
    Int den = 1;
    for (std::size_t i = 0; i < frac.size(); ++i) den *= 10;
    const Int num = (whole.empty() ? Int(0) : parse_int(whole, "decimal")) * den +
                    parse_int(frac, "decimal");
    return FieldElement::rational(num, den);
  }
  return FieldElement(parse_int(term, "number"));
}

inline FieldElement parse_sum(std::string_view body) {
  if (body.empty()) throw ParseError("empty field element");
  FieldElement total(0);
  std::size_t start = 0;
  bool negative = false;
  if (body[0] == '+' || body[0] == '-') {
    negative = body[0] == '-';
    start = 1;
  }
  std::size_t pos = start;
  auto flush = [&](std::size_t end) {
    if (end == start) throw ParseError("empty term in field element");
    const FieldElement term = parse_term(body.substr(start, end - start));
    total += negative ? -term : term;
  };
  int depth = 0;
  for (; pos < body.size(); ++pos) {
    const char ch = body[pos];
    if (ch == '(') ++depth;
    if (ch == ')') --depth;
    if (depth == 0 && (ch == '+' || ch == '-') && pos > start) {
      flush(pos);
      negative = ch == '-';
      start = pos + 1;
    }
  }
  if (depth != 0) throw ParseError("unbalanced parentheses");
  flush(pos);
  return total;
}

}  // namespace detail

inline FieldElement parse_field_element(std::string_view text) {
  std::string s(text);
  detail::strip_spaces(s);
  if (s.empty()) throw ParseError("empty field element");
  // Split one top-level '/': everything after it is an integer denominator.
  std::string_view body(s);
  FieldElement denom(1);
  int depth = 0;
  for (std::size_t i = 0; i < body.size(); ++i) {
    if (body[i] == '(') ++depth;
    if (body[i] == ')') --depth;
    if (body[i] == '/' && depth == 0) {
      denom = FieldElement(detail::parse_int(body.substr(i + 1), "denominator"));
      if (denom.is_zero()) throw ParseError("zero denominator");
      body = body.substr(0, i);
      break;
    }
  }
  if (body.size() >= 2 && body.front() == '(' && body.back() == ')') {
    // Strip an outer parenthesis pair when it wraps the whole numerator.
    int inner = 0;
    bool wraps = true;
    for (std::size_t i = 0; i + 1 < body.size(); ++i) {
      if (body[i] == '(') ++inner;
      if (body[i] == ')') --inner;
      if (inner == 0) {
        wraps = false;
        break;
      }
    }
    if (wraps) body = body.substr(1, body.size() - 2);
  }
  return detail::parse_sum(body) / denom;
}

inline std::string to_string(const FieldElement& x) {
  if (x.is_rational()) {
    std::string out = x.a().str();
    if (x.c() != 1) out += "/" + x.c().str();
    return out;
  }
  std::string inner;
  if (x.a() != 0) inner = x.a().str();
  const Int babs = boost::multiprecision::abs(x.b());
  if (x.b() < 0)
    inner += "-";
  else if (!inner.empty())
    inner += "+";
  if (babs != 1) inner += babs.str() + "*";
  inner += "sqrt(" + x.d().str() + ")";
  if (x.c() == 1) return inner;
  // Parenthesize two-term numerators so a/c reading stays unambiguous.
  if (x.a() != 0) inner = "(" + inner + ")";
  return inner + "/" + x.c().str();
}

// 12 significant digits, display only.
inline std::string approx_string(const FieldElement& x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", x.approx());
  return buf;
}

inline ContinuedFraction parse_continued_fraction(std::string_view text) {
  std::string s(text);
  detail::strip_spaces(s);
  if (!s.starts_with("[0;") || !s.ends_with("]"))
    throw ParseError("continued fraction must look like [0;a1,a2,(b1,b2)]");
  std::string_view body(s);
  body = body.substr(3, body.size() - 4);
  std::vector<long long> pre, per;
  bool saw_period = false;
  std::size_t pos = 0;
  while (pos < body.size()) {
    if (body[pos] == '(') {
      if (saw_period) throw ParseError("more than one period group");
      const auto close = body.find(')', pos);
      if (close == std::string_view::npos) throw ParseError("unterminated period");
      std::string_view group = body.substr(pos + 1, close - pos - 1);
      while (!group.empty()) {
        const auto comma = group.find(',');
        const std::string_view digit = group.substr(0, comma);
        per.push_back(detail::parse_int(digit, "period digit").convert_to<long long>());
        if (comma == std::string_view::npos) break;
        group.remove_prefix(comma + 1);
      }
      if (per.empty()) throw ParseError("empty period group");
      saw_period = true;
      pos = close + 1;
      if (pos != body.size()) throw ParseError("period must close the expansion");
    } else {
      const auto comma = body.find(',', pos);
      const auto end = comma == std::string_view::npos ? body.size() : comma;
      pre.push_back(detail::parse_int(body.substr(pos, end - pos), "digit").convert_to<long long>());
      pos = comma == std::string_view::npos ? body.size() : comma + 1;
      if (comma != std::string_view::npos && pos == body.size())
        throw ParseError("trailing comma");
    }
  }
  if (pre.empty() && per.empty()) throw ParseError("empty continued fraction");
  try {
    return ContinuedFraction(std::move(pre), std::move(per));
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what());
  }
}

inline std::string to_string(const ContinuedFraction& cf) {
  std::string out = "[0;";
  for (std::size_t i = 0; i < cf.preperiod().size(); ++i) {
    if (i) out += ",";
    out += std::to_string(cf.preperiod()[i]);
  }
  if (!cf.period().empty()) {
    if (!cf.preperiod().empty()) out += ",";
    out += "(";
    for (std::size_t i = 0; i < cf.period().size(); ++i) {
      if (i) out += ",";
      out += std::to_string(cf.period()[i]);
    }
    out += ")";
  }
  out += "]";
  return out;
}

// "[x,y)" with field-element endpoints.
inline std::pair<FieldElement, FieldElement> parse_interval(std::string_view text) {
  std::string s(text);
  detail::strip_spaces(s);
  if (s.size() < 4 || s.front() != '[' || s.back() != ')')
    throw ParseError("interval must look like [x,y)");
  std::string_view body(s);
  body = body.substr(1, body.size() - 2);
  int depth = 0;
  for (std::size_t i = 0; i < body.size(); ++i) {
    if (body[i] == '(') ++depth;
    if (body[i] == ')') --depth;
    if (body[i] == ',' && depth == 0)
      return {parse_field_element(body.substr(0, i)),
              parse_field_element(body.substr(i + 1))};
  }
  throw ParseError("interval needs a top-level comma");
}

}  // namespace sturmian
