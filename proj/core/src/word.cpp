#include "cyclift/word.hpp"

#include <cctype>
#include <limits>
#include <utility>

#include "cyclift/errors.hpp"

namespace cyclift {

namespace {

// Hard cap on materialized syllables; substitution of a long image under a
// huge exponent would otherwise exhaust memory silently.
constexpr std::size_t kMaxSyllables = std::size_t{1} << 24;

std::size_t checked_count(const Int& magnitude, std::size_t per_unit) {
  if (magnitude > kMaxSyllables) {
    throw std::length_error("word too large to materialize");
  }
  const auto count = magnitude.convert_to<std::size_t>();
  if (per_unit != 0 && count > kMaxSyllables / per_unit) {
    throw std::length_error("word too large to materialize");
  }
  return count;
}

}  // namespace

Generator Generator::alpha(int index) {
  if (index < 1) {
    throw IndexOutOfRange("generator index must be >= 1, got a" + std::to_string(index));
  }
  return Generator{GenKind::Alpha, index, 0};
}

Generator Generator::x(int i, int j) {
  if (i < 1 || j < 1) {
    throw IndexOutOfRange("generator indices must be >= 1, got x" + std::to_string(i) +
                          "." + std::to_string(j));
  }
  return Generator{GenKind::X, i, j};
}

std::string to_string(const Generator& gen) {
  switch (gen.kind) {
    case GenKind::Alpha:
      return "a" + std::to_string(gen.i);
    case GenKind::Gamma:
      return "g";
    case GenKind::X:
      return "x" + std::to_string(gen.i) + "." + std::to_string(gen.j);
  }
  return "?";
}

Word::Word(std::vector<Syllable> raw) : syl_(free_reduce(std::move(raw)).syl_) {}

Word Word::inverse() const {
  std::vector<Syllable> rev;
  rev.reserve(syl_.size());
  for (auto it = syl_.rbegin(); it != syl_.rend(); ++it) {
    rev.push_back(Syllable{it->gen, -it->exp});
  }
  return Word(reduced_tag{}, std::move(rev));  // reversal of a reduced word is reduced
}

Word free_reduce(std::vector<Syllable> raw) {
  std::vector<Syllable> stack;
  stack.reserve(raw.size());
  for (auto& s : raw) {
    if (s.exp == 0) {
      continue;
    }
    if (!stack.empty() && stack.back().gen == s.gen) {
      stack.back().exp += s.exp;
      if (stack.back().exp == 0) {
        stack.pop_back();
      }
    } else {
      stack.push_back(std::move(s));
    }
  }
  return Word(Word::reduced_tag{}, std::move(stack));
}

Int exponent_sum(const Word& w, const Generator& gen) {
  Int sum = 0;
  for (const auto& s : w.syllables()) {
    if (s.gen == gen) {
      sum += s.exp;
    }
  }
  return sum;
}

Word concat(const Word& a, const Word& b) {
  std::vector<Syllable> raw;
  raw.reserve(a.length() + b.length());
  raw.insert(raw.end(), a.syllables().begin(), a.syllables().end());
  raw.insert(raw.end(), b.syllables().begin(), b.syllables().end());
  return free_reduce(std::move(raw));
}

Word substitute(const Word& w, const std::map<Generator, Word>& images) {
  std::vector<Syllable> raw;
  for (const auto& s : w.syllables()) {
    auto it = images.find(s.gen);
    if (it == images.end()) {
      throw MissingImage(to_string(s.gen));
    }
    const Word& img = it->second;
    if (img.empty()) {
      continue;
    }
    if (img.length() == 1) {
      // (h^k)^e = h^(k e); keeps symbolic powers O(1).
      raw.push_back(Syllable{img.syllables()[0].gen, img.syllables()[0].exp * s.exp});
      continue;
    }
    const Word block = s.exp > 0 ? img : img.inverse();
    const std::size_t reps = checked_count(abs(s.exp), block.length());
    if (raw.size() + reps * block.length() > kMaxSyllables) {
      throw std::length_error("word too large to materialize");
    }
    for (std::size_t k = 0; k < reps; ++k) {
      raw.insert(raw.end(), block.syllables().begin(), block.syllables().end());
    }
  }
  return free_reduce(std::move(raw));
}

Word theta_shift(const Word& w, long long shift, int n) {
  if (n < 1) {
    throw InputError("theta shift needs n >= 1");
  }
  std::vector<Syllable> out;
  out.reserve(w.length());
  for (const auto& s : w.syllables()) {
    if (s.gen.kind != GenKind::X) {
      throw NonCyclicGenerator("theta shift applies to x generators only, got " +
                               to_string(s.gen));
    }
    const long long j0 = s.gen.j - 1 + shift;
    const long long j = ((j0 % n) + n) % n + 1;
    out.push_back(Syllable{Generator::x(s.gen.i, static_cast<int>(j)), s.exp});
  }
  return free_reduce(std::move(out));
}

std::string to_string(const Word& w) {
  std::string out;
  for (const auto& s : w.syllables()) {
    if (!out.empty()) {
      out += ' ';
    }
    out += to_string(s.gen);
    if (s.exp != 1) {
      out += '^';
      out += s.exp.str();
    }
  }
  return out;
}

namespace {

struct Cursor {
  std::string_view text;
  std::size_t pos = 0;
  int line;
  int col_offset;

  int column() const { return static_cast<int>(pos) + 1 + col_offset; }
  bool done() const { return pos >= text.size(); }
  char peek() const { return text[pos]; }

  [[noreturn]] void fail(const std::string& expected) const {
    throw SyntaxError(line, column(), expected);
  }
};

int parse_index(Cursor& c, const char* what) {
  if (c.done() || !std::isdigit(static_cast<unsigned char>(c.peek()))) {
    c.fail(what);
  }
  long long value = 0;
  while (!c.done() && std::isdigit(static_cast<unsigned char>(c.peek()))) {
    value = value * 10 + (c.peek() - '0');
    if (value > std::numeric_limits<int>::max()) {
      c.fail("a smaller generator index");
    }
    ++c.pos;
  }
  return static_cast<int>(value);
}

Generator parse_generator(Cursor& c, WordAlphabet alphabet) {
  const int start_col = c.column();
  const char head = c.peek();
  if (head == 'a') {
    if (alphabet == WordAlphabet::cyclic) {
      c.fail("generator x<i>.<j>");
    }
    ++c.pos;
    const int i = parse_index(c, "generator index after 'a'");
    if (i < 1) {
      throw SyntaxError(c.line, start_col, "positive generator index");
    }
    return Generator::alpha(i);
  }
  if (head == 'g') {
    if (alphabet == WordAlphabet::cyclic) {
      c.fail("generator x<i>.<j>");
    }
    ++c.pos;
    return Generator::gamma();
  }
  if (head == 'x') {
    if (alphabet == WordAlphabet::presentation) {
      c.fail("generator a<i> or g");
    }
    ++c.pos;
    const int i = parse_index(c, "first index after 'x'");
    if (c.done() || c.peek() != '.') {
      c.fail("'.' between x indices");
    }
    ++c.pos;
    const int j = parse_index(c, "second index after '.'");
    if (i < 1 || j < 1) {
      throw SyntaxError(c.line, start_col, "positive generator indices");
    }
    return Generator::x(i, j);
  }
  switch (alphabet) {
    case WordAlphabet::presentation:
      c.fail("generator a<i> or g");
    case WordAlphabet::cyclic:
      c.fail("generator x<i>.<j>");
    default:
      c.fail("generator a<i>, g or x<i>.<j>");
  }
}

Int parse_exponent(Cursor& c) {
  // caller consumed '^'
  bool negative = false;
  if (!c.done() && (c.peek() == '-' || c.peek() == '+')) {
    negative = c.peek() == '-';
    ++c.pos;
  }
  if (c.done() || !std::isdigit(static_cast<unsigned char>(c.peek()))) {
    c.fail("exponent integer after '^'");
  }
  std::string digits;
  while (!c.done() && std::isdigit(static_cast<unsigned char>(c.peek()))) {
    digits += c.peek();
    ++c.pos;
  }
  Int value(digits);
  return negative ? Int(-value) : value;
}

}  // namespace

Word parse_word(std::string_view text, WordAlphabet alphabet, int line, int column_offset) {
  Cursor c{text, 0, line, column_offset};
  std::vector<Syllable> raw;
  while (true) {
    while (!c.done() && (c.peek() == ' ' || c.peek() == '\t')) {
      ++c.pos;
    }
    if (c.done()) {
      break;
    }
    Generator gen = parse_generator(c, alphabet);
    Int exp = 1;
    if (!c.done() && c.peek() == '^') {
      ++c.pos;
      exp = parse_exponent(c);
    }
    if (!c.done() && c.peek() != ' ' && c.peek() != '\t') {
      c.fail("space between syllables");
    }
    raw.push_back(Syllable{gen, std::move(exp)});
  }
  return free_reduce(std::move(raw));
}

}  // namespace cyclift
