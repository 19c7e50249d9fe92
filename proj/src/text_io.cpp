#include "evord/text_io.hpp"

#include <cctype>

#include "evord/error.hpp"

namespace evord {

namespace {

class Scanner {
 public:
  explicit Scanner(std::string_view text) : text_(text) {}

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool at_end() {
    skip_space();
    return pos_ >= text_.size();
  }
  char peek() {
    skip_space();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }
  bool accept(char c) {
    if (peek() != c) return false;
    ++pos_;
    return true;
  }
  void expect(char c) {
    if (!accept(c)) throw ParseError(std::string("expected '") + c + "'", pos_);
  }
  int integer() {
    skip_space();
    const auto start = pos_;
    long v = 0;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      v = v * 10 + (text_[pos_] - '0');
      if (v > 1000000) throw ParseError("integer too large", start);
      ++pos_;
    }
    if (pos_ == start) throw ParseError("expected integer", start);
    return static_cast<int>(v);
  }
  std::size_t pos() const { return pos_; }

  Permutation permutation() {
    const auto start = (skip_space(), pos_);
    expect('(');
    std::vector<int> image;
    image.push_back(integer());
    while (accept(',')) image.push_back(integer());
    expect(')');
    try {
      return Permutation(image);
    } catch (const Error& e) {
      throw ParseError(e.what(), start);
    }
  }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

Permutation parse_permutation(std::string_view text) {
  Scanner s(text);
  auto p = s.permutation();
  if (!s.at_end()) throw ParseError("trailing characters", s.pos());
  return p;
}

PermSet parse_permset(std::string_view text, bool canonical) {
  Scanner s(text);
  const bool braced = s.accept('{');
  std::vector<Permutation> members;
  std::vector<std::size_t> offsets;
  do {
    s.skip_space();
    offsets.push_back(s.pos());
    members.push_back(s.permutation());
  } while (s.accept(',') || s.accept(';'));
  if (braced) s.expect('}');
  if (!s.at_end()) throw ParseError("trailing characters", s.pos());
  for (std::size_t i = 1; i < members.size(); ++i) {
    if (members[i].size() != members[0].size()) {
      throw ParseError("permutation sizes differ", offsets[i]);
    }
    for (std::size_t j = 0; j < i; ++j) {
      if (members[i] == members[j]) throw ParseError("duplicate member " + members[i].str(), offsets[i]);
    }
  }
  PermSet out(std::move(members));
  return canonical ? canonicalize(out) : out;
}

std::vector<PermSet> parse_permset_lines(std::string_view text) {
  std::vector<PermSet> out;
  std::size_t start = 0;
  while (start <= text.size()) {
    auto end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    auto line = text.substr(start, end - start);
    std::size_t i = 0;
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    if (i < line.size() && line[i] != '#') {
      try {
        out.push_back(parse_permset(line));
      } catch (const ParseError& e) {
        throw ParseError(std::string(e.what()) + " in line starting at", start);
      }
    }
    start = end + 1;
  }
  return out;
}

}  // namespace evord
