#include "minperm/cayley_io.hpp"

#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include "minperm/error.hpp"

namespace minperm {

namespace {

// Yields whitespace-separated tokens, skipping '#' comment lines.
class TokenReader {
public:
  explicit TokenReader(std::istream &in) : in_(in) {}

  bool next(long long &value) {
    while (true) {
      if (line_ >> value) return true;
      if (!line_.eof()) throw Error(ErrorCode::ParseError, "non-integer token on line " + std::to_string(line_no_));
      std::string raw;
      if (!std::getline(in_, raw)) return false;
      ++line_no_;
      const auto first = raw.find_first_not_of(" \t\r");
      if (first != std::string::npos && raw[first] == '#') raw.clear();
      line_.clear();
      line_.str(raw);
    }
  }

  std::size_t line() const { return line_no_; }

private:
  std::istream &in_;
  std::istringstream line_;
  std::size_t line_no_ = 0;
};

}  // namespace

GroupTable read_cayley_table(std::istream &in, std::string label, std::size_t order_cap) {
  TokenReader reader(in);
  long long n = 0;
  if (!reader.next(n) || n <= 0) throw Error(ErrorCode::ParseError, "missing or invalid order line");
  if (static_cast<std::size_t>(n) > order_cap)
    throw Error(ErrorCode::OrderCapExceeded, "table order " + std::to_string(n) + " above cap");
  std::vector<std::vector<ElementId>> table(static_cast<std::size_t>(n));
  for (auto &row : table) {
    row.reserve(static_cast<std::size_t>(n));
    for (long long j = 0; j < n; ++j) {
      long long v = 0;
      if (!reader.next(v)) throw Error(ErrorCode::ParseError, "table ended early");
      if (v < 0 || v >= n) throw Error(ErrorCode::NotAGroup, "entry out of range near line " + std::to_string(reader.line()));
      row.push_back(static_cast<ElementId>(v));
    }
  }
  long long extra = 0;
  if (reader.next(extra)) throw Error(ErrorCode::ParseError, "trailing data after table");
  return group_from_cayley_table(table, std::move(label), order_cap);
}

GroupTable read_cayley_table_file(const std::filesystem::path &path, std::size_t order_cap) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::IoError, "cannot open " + path.string());
  return read_cayley_table(in, path.filename().string(), order_cap);
}

void write_cayley_table(std::ostream &out, const GroupTable &g) {
  out << "# " << g.label() << '\n' << g.order() << '\n';
  for (ElementId a = 0; a < g.order(); ++a) {
    const auto r = g.row(a);
    for (std::size_t b = 0; b < r.size(); ++b) out << (b ? " " : "") << r[b];
    out << '\n';
  }
}

}  // namespace minperm
