#pragma once

// Text forms of partitions and Arthur parameters.
//
//   partition := "[" term (sep term)* "]" | term (sep term)*
//   term      := INT | INT "^" INT            sep := "," | whitespace
//   param     := simple ("+" simple)*
//   simple    := "(" INT typ [":" LABEL] "," INT ")"     typ := "o" | "s" | "c"
//
// Canonical partition form is bracketed exponent notation, e.g. "[6 2^7]".

#include <cctype>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "cusp/arthur.hpp"
#include "cusp/error.hpp"
#include "cusp/partition.hpp"

namespace cusp {

namespace detail {

class Cursor {
 public:
  explicit Cursor(std::string_view text) : text_(text) {}

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool done() const { return pos_ >= text_.size(); }
  char peek() const { return done() ? '\0' : text_[pos_]; }
  std::size_t pos() const { return pos_; }

  bool accept(char c) {
    skip_space();
    if (peek() != c) return false;
    ++pos_;
    return true;
  }

  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }

  int integer() {
    skip_space();
    const std::size_t start = pos_;
    long long value = 0;
    while (!done() && std::isdigit(static_cast<unsigned char>(peek()))) {
      value = value * 10 + (peek() - '0');
      if (value > 1'000'000) fail("integer too large");
      ++pos_;
    }
    if (pos_ == start) fail("expected an integer");
    return static_cast<int>(value);
  }

  std::string until_any(std::string_view stops) {
    const std::size_t start = pos_;
    while (!done() && stops.find(peek()) == std::string_view::npos) ++pos_;
    return std::string(text_.substr(start, pos_ - start));
  }

  [[noreturn]] void fail(const std::string& what) const {
    throw Error(ErrorKind::ParseError,
                what + " at offset " + std::to_string(pos_) + " in \"" + std::string(text_) + "\"");
  }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;
};

inline std::string trim(std::string_view s) {
  std::size_t b = 0;
  std::size_t e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return std::string(s.substr(b, e - b));
}

}  // namespace detail

inline Partition parse_partition(std::string_view text) {
  detail::Cursor cur(text);
  std::vector<int> parts;
  const bool bracketed = cur.accept('[');
  auto term = [&] {
    const int value = cur.integer();
    int times = 1;
    if (cur.accept('^')) times = cur.integer();
    parts.insert(parts.end(), static_cast<std::size_t>(times), value);
  };
  cur.skip_space();
  const bool empty_list = bracketed ? cur.peek() == ']' : cur.done();
  if (!empty_list) {
    term();
    for (;;) {
      cur.skip_space();
      if (cur.done() || cur.peek() == ']') break;
      cur.accept(',');
      term();
    }
  }
  if (bracketed) cur.expect(']');
  cur.skip_space();
  if (!cur.done()) cur.fail("trailing characters");
  return Partition(std::move(parts));
}

inline std::string render_partition(const Partition& p) {
  std::string out = "[";
  bool first = true;
  for (auto [value, mult] : p.grouped()) {
    if (!first) out += ' ';
    first = false;
    out += std::to_string(value);
    if (mult > 1) out += '^' + std::to_string(mult);
  }
  out += ']';
  return out;
}

/// Label given to the k-th summand (1-based) when the text omits one.
inline std::string auto_label(std::size_t k) { return "\xCF\x84" + std::to_string(k); }  // "τk"

/// Parses summands without validating them.
inline std::vector<SimpleParameter> parse_summands(std::string_view text) {
  detail::Cursor cur(text);
  std::vector<SimpleParameter> out;
  do {
    cur.expect('(');
    SimpleParameter s;
    s.rank = cur.integer();
    cur.skip_space();
    const char typ = cur.peek();
    if (typ != 'o' && typ != 's' && typ != 'c') cur.fail("expected type letter o, s or c");
    cur.accept(typ);
    if (typ == 'c' && s.rank != 1) cur.fail("type c is a rank-1 character");
    s.dual_type = typ == 's' ? SelfDualType::Symplectic : SelfDualType::Orthogonal;
    if (cur.accept(':')) {
      s.label = detail::trim(cur.until_any(",()+"));
      if (s.label.empty()) cur.fail("empty label");
    } else {
      s.label = auto_label(out.size() + 1);
    }
    cur.expect(',');
    s.mult = cur.integer();
    cur.expect(')');
    if (s.rank == 1) {
      s.central_char = {s.label, s.label == "1" ? Triviality::Trivial : Triviality::Unknown};
    } else {
      s.central_char = {"\xCF\x89_" + s.label, Triviality::Unknown};  // "ω_label"
    }
    out.push_back(std::move(s));
  } while (cur.accept('+'));
  cur.skip_space();
  if (!cur.done()) cur.fail("trailing characters");
  return out;
}

/// Parses and validates; throws InvalidArgument listing validation errors.
inline ArthurParameter parse_parameter(std::string_view text) {
  return validate(parse_summands(text)).value();
}

inline std::string render_summands(const std::vector<SimpleParameter>& summands) {
  std::string out;
  for (std::size_t i = 0; i < summands.size(); ++i) {
    const auto& s = summands[i];
    if (i) out += '+';
    out += '(' + std::to_string(s.rank);
    if (s.rank == 1 && s.dual_type == SelfDualType::Orthogonal) {
      out += 'c';
    } else {
      out += s.dual_type == SelfDualType::Symplectic ? 's' : 'o';
    }
    if (s.label != auto_label(i + 1)) out += ':' + s.label;
    out += ',' + std::to_string(s.mult) + ')';
  }
  return out;
}

inline std::string render_parameter(const ArthurParameter& psi) { return render_summands(psi.summands()); }

/// Parameter text with "$name" integer slots, e.g. "(1c,$b1)+(2s,$b2)".
class ParameterTemplate {
 public:
  explicit ParameterTemplate(std::string text) : text_(std::move(text)) {
    for (std::size_t i = 0; i < text_.size(); ++i) {
      if (text_[i] != '$') continue;
      std::size_t j = i + 1;
      while (j < text_.size() && (std::isalnum(static_cast<unsigned char>(text_[j])) || text_[j] == '_')) ++j;
      if (j == i + 1) throw Error(ErrorKind::InvalidArgument, "'$' without a slot name in template");
      std::string name = text_.substr(i + 1, j - i - 1);
      if (std::find(slots_.begin(), slots_.end(), name) == slots_.end()) slots_.push_back(name);
      i = j - 1;
    }
    std::map<std::string, int> ones;
    for (const auto& s : slots_) ones[s] = 1;
    try {
      parse_summands(instantiate(ones));
    } catch (const Error& e) {
      throw Error(ErrorKind::InvalidArgument, std::string("malformed template: ") + e.what());
    }
  }

  const std::string& text() const noexcept { return text_; }
  const std::vector<std::string>& slots() const noexcept { return slots_; }

  std::string instantiate(const std::map<std::string, int>& values) const {
    std::string out;
    for (std::size_t i = 0; i < text_.size(); ++i) {
      if (text_[i] != '$') {
        out += text_[i];
        continue;
      }
      std::size_t j = i + 1;
      while (j < text_.size() && (std::isalnum(static_cast<unsigned char>(text_[j])) || text_[j] == '_')) ++j;
      const std::string name = text_.substr(i + 1, j - i - 1);
      auto it = values.find(name);
      if (it == values.end()) throw Error(ErrorKind::InvalidArgument, "no value for slot $" + name);
      out += std::to_string(it->second);
      i = j - 1;
    }
    return out;
  }

 private:
  std::string text_;
  std::vector<std::string> slots_;
};

}  // namespace cusp
