#include "b1/text_format.hpp"

#include <charconv>
#include <fstream>
#include <numeric>
#include <optional>
#include <sstream>

namespace b1 {

namespace {

struct Line {
  std::size_t number;
  std::vector<std::string> tokens;
};

std::vector<Line> tokenize(std::string_view text) {
  std::vector<Line> lines;
  std::size_t number = 0;
  std::istringstream in{std::string(text)};
  for (std::string raw; std::getline(in, raw);) {
    ++number;
    if (auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
    std::istringstream words(raw);
    Line line{number, {}};
    for (std::string w; words >> w;) line.tokens.push_back(w);
    if (!line.tokens.empty()) lines.push_back(std::move(line));
  }
  return lines;
}

class Cursor {
 public:
  explicit Cursor(std::string_view text) : lines_(tokenize(text)) {}

  const Line& next(std::string_view expecting) {
    if (pos_ >= lines_.size()) {
      std::size_t last = lines_.empty() ? 0 : lines_.back().number;
      throw ParseError(last, "unexpected end of input, expected " + std::string(expecting));
    }
    return lines_[pos_++];
  }

  void keyword(std::string_view word) {
    const Line& line = next(word);
    if (line.tokens.size() != 1 || line.tokens[0] != word) {
      throw ParseError(line.number, "expected '" + std::string(word) + "'");
    }
  }

  std::size_t keyed_number(std::string_view key) {
    const Line& line = next(key);
    if (line.tokens.size() != 2 || line.tokens[0] != key) {
      throw ParseError(line.number, "expected '" + std::string(key) + " <number>'");
    }
    return number(line, line.tokens[1]);
  }

  Table rows(std::size_t n, std::string_view what) {
    Table t;
    for (std::size_t r = 0; r < n; ++r) {
      const Line& line = next(std::string(what) + " row");
      if (line.tokens.size() != n) {
        throw ParseError(line.number, std::string(what) + " row has " + std::to_string(line.tokens.size()) +
                                          " entries, expected " + std::to_string(n));
      }
      for (const std::string& tok : line.tokens) {
        std::size_t v = number(line, tok);
        if (v >= n) throw ParseError(line.number, "entry " + tok + " out of range");
        t.push_back(static_cast<Element>(v));
      }
    }
    return t;
  }

  void finish() {
    if (pos_ < lines_.size()) throw ParseError(lines_[pos_].number, "trailing content");
  }

  static std::size_t number(const Line& line, const std::string& tok) {
    std::size_t v = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (ec != std::errc{} || ptr != tok.data() + tok.size()) {
      throw ParseError(line.number, "not a number: " + tok);
    }
    return v;
  }

 private:
  std::vector<Line> lines_;
  std::size_t pos_ = 0;
};

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(0, "cannot open " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_rows(std::ostringstream& out, const Table& t, std::size_t n) {
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) out << (y ? " " : "") << t[x * n + y];
    out << '\n';
  }
}

std::optional<Element> find_identity(const Table& t, std::size_t n) {
  for (Element e = 0; e < n; ++e) {
    bool ok = true;
    for (Element x = 0; x < n && ok; ++x) ok = t[e * n + x] == x && t[x * n + e] == x;
    if (ok) return e;
  }
  return std::nullopt;
}

}  // namespace

Algebra parse_algebra(std::string_view text) {
  Cursor c(text);
  const std::size_t n = c.keyed_number("n");
  if (n == 0 || n > kMaxElements) throw ParseError(1, "size must be in [1, 32]");
  c.keyword("add");
  Table add = c.rows(n, "add");
  c.keyword("mul");
  Table mul = c.rows(n, "mul");
  c.finish();

  auto zero = find_identity(add, n);
  auto one = find_identity(mul, n);
  if (!zero) throw Error(ErrorCode::BadIdentity, "no additive identity");
  if (!one) throw Error(ErrorCode::BadIdentity, "no multiplicative identity");
  if (n == 1 || (*zero == 0 && *one == 1)) return Algebra::build(n, std::move(add), std::move(mul));
  if (*zero == *one) throw Error(ErrorCode::BadIdentity, "0 and 1 coincide", {*zero});

  // old index -> new index, with the identities moved to 0 and 1
  std::vector<Element> order{*zero, *one};
  for (Element x = 0; x < n; ++x) {
    if (x != *zero && x != *one) order.push_back(x);
  }
  std::vector<Element> perm(n);
  for (std::size_t k = 0; k < n; ++k) perm[order[k]] = static_cast<Element>(k);
  Table add2(n * n), mul2(n * n);
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      add2[perm[x] * n + perm[y]] = perm[add[x * n + y]];
      mul2[perm[x] * n + perm[y]] = perm[mul[x * n + y]];
    }
  }
  return Algebra::build(n, std::move(add2), std::move(mul2));
}

Algebra parse_algebra_file(const std::filesystem::path& path) { return parse_algebra(read_file(path)); }

std::string format_algebra(const Algebra& a) {
  std::ostringstream out;
  out << "n " << a.size() << "\nadd\n";
  write_rows(out, a.add_table(), a.size());
  out << "mul\n";
  write_rows(out, a.mul_table(), a.size());
  return out.str();
}

Monoid parse_monoid(std::string_view text) {
  Cursor c(text);
  const std::size_t n = c.keyed_number("n");
  if (n == 0 || n > kMaxElements) throw ParseError(1, "size must be in [1, 32]");
  const std::size_t e = c.keyed_number("e");
  if (e >= n) throw ParseError(2, "identity index out of range");
  c.keyword("op");
  Table op = c.rows(n, "op");
  c.finish();
  return Monoid::build(n, std::move(op), static_cast<Element>(e));
}

Monoid parse_monoid_file(const std::filesystem::path& path) { return parse_monoid(read_file(path)); }

std::string format_monoid(const Monoid& m) {
  std::ostringstream out;
  out << "n " << m.size() << "\ne " << m.identity() << "\nop\n";
  write_rows(out, m.table(), m.size());
  return out.str();
}

}  // namespace b1
