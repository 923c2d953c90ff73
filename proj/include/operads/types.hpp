#pragma once

#include <algorithm>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace operads {

// Raised on malformed textual input (tree DSL, profile notation, tables).
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : std::runtime_error(what + " (at position " + std::to_string(position) + ")"),
        position_(position) {}
  explicit ParseError(const std::string& what) : std::runtime_error(what), position_(0) {}

  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

// Raised when an operation is applied outside its domain (profile
// mismatch, index out of range, size mismatch).
class DomainError : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

inline bool is_colour_token(std::string_view s) {
  if (s.empty()) return false;
  return std::all_of(s.begin(), s.end(), [](char c) {
    return (c >= 'a' && c <= 'z') || (c >= '0' && c <= '9') || c == '_';
  });
}

// A sort label. Tokens are non-empty words over [a-z0-9_] and compare by
// exact equality.
struct Colour {
  std::string name;

  Colour() = default;
  Colour(std::string n) : name(std::move(n)) {}
  Colour(const char* n) : name(n) {}

  auto operator<=>(const Colour&) const = default;
};

// The signature (c1,...,cn;c) of an operation: n input colours in order
// and one output colour. n = 0 is legal.
struct Profile {
  std::vector<Colour> inputs;
  Colour output;

  Profile() = default;
  Profile(std::vector<Colour> in, Colour out)
      : inputs(std::move(in)), output(std::move(out)) {}

  int arity() const { return static_cast<int>(inputs.size()); }

  auto operator<=>(const Profile&) const = default;
};

// Text form "(c1,...,cn;c)"; empty inputs print as "(;c)".
inline std::string format_profile(const Profile& p) {
  std::string out = "(";
  for (std::size_t i = 0; i < p.inputs.size(); ++i) {
    if (i) out += ',';
    out += p.inputs[i].name;
  }
  out += ';';
  out += p.output.name;
  out += ')';
  return out;
}

namespace detail {

class TokenScanner {
 public:
  explicit TokenScanner(std::string_view text) : text_(text) {}

  void skip_ws() {
    while (pos_ < text_.size() && (text_[pos_] == ' ' || text_[pos_] == '\t' ||
                                   text_[pos_] == '\n' || text_[pos_] == '\r'))
      ++pos_;
  }

  bool at_end() {
    skip_ws();
    return pos_ >= text_.size();
  }

  char peek() {
    skip_ws();
    if (pos_ >= text_.size()) throw ParseError("unexpected end of input", pos_);
    return text_[pos_];
  }

  void expect(char c) {
    skip_ws();
    if (pos_ >= text_.size() || text_[pos_] != c)
      throw ParseError(std::string("expected '") + c + "'", pos_);
    ++pos_;
  }

  bool accept(char c) {
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  std::string word() {
    skip_ws();
    std::size_t start = pos_;
    while (pos_ < text_.size() && (islowerdigit(text_[pos_]) || text_[pos_] == '_')) ++pos_;
    if (pos_ == start) throw ParseError("expected a token over [a-z0-9_]", pos_);
    return std::string(text_.substr(start, pos_ - start));
  }

  std::int64_t integer() {
    skip_ws();
    std::size_t start = pos_;
    while (pos_ < text_.size() && text_[pos_] >= '0' && text_[pos_] <= '9') ++pos_;
    if (pos_ == start) throw ParseError("expected a number", pos_);
    std::string digits(text_.substr(start, pos_ - start));
    if (digits.size() > 18) throw ParseError("number out of range", start);
    return std::stoll(digits);
  }

  std::size_t position() const { return pos_; }

 private:
  static bool islowerdigit(char c) {
    return (c >= 'a' && c <= 'z') || (c >= '0' && c <= '9');
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

inline Profile parse_profile_body(TokenScanner& sc) {
  sc.expect('(');
  Profile p;
  if (!sc.accept(';')) {
    for (;;) {
      p.inputs.emplace_back(sc.word());
      if (sc.accept(',')) continue;
      sc.expect(';');
      break;
    }
  }
  p.output = Colour(sc.word());
  sc.expect(')');
  return p;
}

}  // namespace detail

// Parses "(a,b;c)" or "(;c)".
inline Profile parse_profile(std::string_view text) {
  detail::TokenScanner sc(text);
  Profile p = detail::parse_profile_body(sc);
  if (!sc.at_end()) throw ParseError("trailing input after profile", sc.position());
  return p;
}

// Parses "(a;b);(c,d;e)" -- profiles joined by ';'.
inline std::vector<Profile> parse_profile_list(std::string_view text) {
  std::vector<Profile> out;
  detail::TokenScanner sc(text);
  if (sc.at_end()) return out;
  for (;;) {
    out.push_back(detail::parse_profile_body(sc));
    if (sc.at_end()) break;
    sc.expect(';');
  }
  return out;
}

}  // namespace operads
