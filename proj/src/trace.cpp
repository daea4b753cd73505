#include "avoid/trace.hpp"

#include <charconv>
#include <limits>

#include "avoid/error.hpp"

namespace avoid {

CouplingTrace::CouplingTrace(std::uint32_t k) : k_(k) {
  if (k < 1) throw DomainError("walker count k must be at least 1");
}

void CouplingTrace::push_row(std::span<const std::uint8_t> row) {
  if (row.size() != k_) throw DomainError("trace row has " + std::to_string(row.size()) + " entries, expected k");
  for (std::uint8_t x : row) {
    if (x > 1) throw DomainError("occupancy entries must be 0 or 1");
  }
  cells_.insert(cells_.end(), row.begin(), row.end());
}

WalkerTrace::WalkerTrace(std::uint32_t n, std::uint32_t k, bool looped) : n_(n), k_(k), looped_(looped) {
  if (k < 1) throw DomainError("walker count k must be at least 1");
  if (n < 1) throw DomainError("vertex count n must be at least 1");
}

void WalkerTrace::push_row(std::span<const std::int32_t> row) {
  if (row.size() != k_) throw DomainError("trace row has " + std::to_string(row.size()) + " entries, expected k");
  for (std::int32_t v : row) {
    if (v < 1 || static_cast<std::uint32_t>(v) > n_) {
      throw DomainError("vertex " + std::to_string(v) + " outside [1, n]");
    }
  }
  cells_.insert(cells_.end(), row.begin(), row.end());
}

namespace {

template <class Cell>
void append_rows(std::string& out, std::span<const Cell> cells, std::uint32_t k) {
  char buf[16];
  for (std::size_t n = 0; n < cells.size(); ++n) {
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, static_cast<std::int64_t>(cells[n]));
    out.append(buf, ptr);
    out += (n + 1) % k == 0 ? '\n' : ' ';
  }
}

class Tokenizer {
 public:
  explicit Tokenizer(std::string_view text) : text_(text) {}

  /// Tokens of the next non-empty line; empty at end of input.
  std::vector<std::string_view> next_line() {
    std::vector<std::string_view> tokens;
    while (tokens.empty() && pos_ < text_.size()) {
      std::size_t nl = text_.find('\n', pos_);
      if (nl == std::string_view::npos) nl = text_.size();
      std::string_view line = text_.substr(pos_, nl - pos_);
      pos_ = nl + 1;
      ++line_no_;
      std::size_t i = 0;
      while (i < line.size()) {
        while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
        std::size_t j = i;
        while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r') ++j;
        if (j > i) tokens.push_back(line.substr(i, j - i));
        i = j;
      }
    }
    return tokens;
  }
  std::size_t line_no() const { return line_no_; }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;
  std::size_t line_no_ = 0;
};

std::int64_t to_int(std::string_view tok, std::size_t line) {
  std::int64_t v = 0;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
  if (ec != std::errc{} || ptr != tok.data() + tok.size()) {
    throw DomainError("malformed integer '" + std::string(tok) + "' on trace line " + std::to_string(line));
  }
  return v;
}

}  // namespace

std::string serialize_trace(const CouplingTrace& tr) {
  std::string out = std::to_string(tr.length()) + " " + std::to_string(tr.k()) + "\n";
  out.reserve(out.size() + tr.cells().size() * 2);
  append_rows(out, tr.cells(), tr.k());
  return out;
}

std::string serialize_trace(const WalkerTrace& tr) {
  std::string out = std::to_string(tr.length()) + " " + std::to_string(tr.k()) + " " + std::to_string(tr.n()) +
                    " " + (tr.looped() ? "1" : "0") + "\n";
  out.reserve(out.size() + tr.cells().size() * 3);
  append_rows(out, tr.cells(), tr.k());
  return out;
}

AnyTrace parse_trace(std::string_view text) {
  Tokenizer in(text);
  auto header = in.next_line();
  if (header.size() != 2 && header.size() != 4) {
    throw DomainError("trace header must be 'T k' or 'T k n looped'");
  }
  const std::int64_t rows = to_int(header[0], in.line_no());
  const std::int64_t k = to_int(header[1], in.line_no());
  if (rows < 0 || k < 1) throw DomainError("trace header has invalid T or k");

  auto read_rows = [&](auto& tr, auto cell_tag) {
    using Cell = decltype(cell_tag);
    std::vector<Cell> row(static_cast<std::size_t>(k));
    tr.reserve(static_cast<std::size_t>(rows));
    for (std::int64_t t = 0; t < rows; ++t) {
      auto tokens = in.next_line();
      if (tokens.size() != static_cast<std::size_t>(k)) {
        throw DomainError("trace line " + std::to_string(in.line_no()) + " does not have k entries");
      }
      for (std::size_t i = 0; i < tokens.size(); ++i) {
        std::int64_t v = to_int(tokens[i], in.line_no());
        if (v < 0 || v > std::numeric_limits<Cell>::max()) {
          throw DomainError("trace entry out of range on line " + std::to_string(in.line_no()));
        }
        row[i] = static_cast<Cell>(v);
      }
      tr.push_row(row);
    }
    if (!in.next_line().empty()) throw DomainError("trace has more rows than its header declares");
  };

  if (header.size() == 2) {
    CouplingTrace tr(static_cast<std::uint32_t>(k));
    read_rows(tr, std::uint8_t{});
    return tr;
  }
  const std::int64_t n = to_int(header[2], in.line_no());
  const std::int64_t looped = to_int(header[3], in.line_no());
  if (n < 1 || (looped != 0 && looped != 1)) throw DomainError("walker trace header has invalid n or looped flag");
  WalkerTrace tr(static_cast<std::uint32_t>(n), static_cast<std::uint32_t>(k), looped == 1);
  read_rows(tr, std::int32_t{});
  return tr;
}

}  // namespace avoid
