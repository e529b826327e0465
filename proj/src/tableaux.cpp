#include "subduce/tableaux.hpp"

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <numeric>
#include <sstream>

#include "subduce/errors.hpp"

namespace subduce {

namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r\n");
  return s.substr(first, last - first + 1);
}

int parse_int(std::string_view token, std::string_view what) {
  token = trim(token);
  int value = 0;
  const auto* end = token.data() + token.size();
  const auto [ptr, ec] = std::from_chars(token.data(), end, value);
  if (token.empty() || ec != std::errc{} || ptr != end) {
    throw InputError("cannot parse " + std::string(what) + " entry '" + std::string(token) + "'");
  }
  return value;
}

std::vector<std::string_view> split(std::string_view text, char sep) {
  std::vector<std::string_view> out;
  std::size_t begin = 0;
  while (true) {
    const auto pos = text.find(sep, begin);
    out.push_back(text.substr(begin, pos == std::string_view::npos ? pos : pos - begin));
    if (pos == std::string_view::npos) break;
    begin = pos + 1;
  }
  return out;
}

void partitions_rec(int remaining, int max_part, std::vector<int>& prefix,
                    std::vector<Partition>& out) {
  if (remaining == 0) {
    out.emplace_back(prefix);
    return;
  }
  for (int part = std::min(remaining, max_part); part >= 1; --part) {
    prefix.push_back(part);
    partitions_rec(remaining - part, part, prefix, out);
    prefix.pop_back();
  }
}

}  // namespace

// ---------------------------------------------------------------------------
// Partition

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (std::size_t k = 0; k < parts_.size(); ++k) {
    if (parts_[k] < 1) throw InputError("partition parts must be positive");
    if (k > 0 && parts_[k] > parts_[k - 1]) {
      throw InputError("partition parts must be weakly decreasing");
    }
  }
  n_ = std::accumulate(parts_.begin(), parts_.end(), 0);
}

Partition Partition::parse(std::string_view text) {
  text = trim(text);
  if (text.empty()) throw InputError("empty partition");
  std::vector<int> parts;
  for (auto token : split(text, ',')) parts.push_back(parse_int(token, "partition"));
  return Partition(std::move(parts));
}

int Partition::row_length(int row) const {
  return row >= 0 && row < rows() ? parts_[static_cast<std::size_t>(row)] : 0;
}

bool Partition::contains(const Partition& other) const {
  if (other.rows() > rows()) return false;
  for (int r = 0; r < other.rows(); ++r) {
    if (other.row_length(r) > row_length(r)) return false;
  }
  return true;
}

Partition Partition::conjugate() const {
  std::vector<int> cols;
  if (!parts_.empty()) {
    for (int c = 0; c < parts_.front(); ++c) {
      int height = 0;
      while (height < rows() && parts_[static_cast<std::size_t>(height)] > c) ++height;
      cols.push_back(height);
    }
  }
  return Partition(std::move(cols));
}

std::string Partition::to_string() const {
  std::string out;
  for (std::size_t k = 0; k < parts_.size(); ++k) {
    if (k > 0) out += ',';
    out += std::to_string(parts_[k]);
  }
  return out;
}

std::vector<Partition> partitions_of(int n) {
  std::vector<Partition> out;
  if (n < 1) return out;
  std::vector<int> prefix;
  partitions_rec(n, n, prefix, out);
  return out;
}

std::uint64_t dimension(const Partition& shape) {
  const int n = shape.size();
  if (n > 33) throw InputError("dimension: n > 33 overflows");
  const Partition conj = shape.conjugate();
  unsigned __int128 numer = 1;
  for (int k = 2; k <= n; ++k) numer *= static_cast<unsigned>(k);
  unsigned __int128 hooks = 1;
  for (int r = 0; r < shape.rows(); ++r) {
    for (int c = 0; c < shape.row_length(r); ++c) {
      const int arm = shape.row_length(r) - c - 1;
      const int leg = conj.row_length(c) - r - 1;
      hooks *= static_cast<unsigned>(arm + leg + 1);
    }
  }
  return static_cast<std::uint64_t>(numer / hooks);
}

// ---------------------------------------------------------------------------
// StandardTableau

StandardTableau::StandardTableau(Partition shape, int start, std::vector<int> word)
    : shape_(std::move(shape)), start_(start), word_(std::move(word)) {
  cells_.resize(word_.size());
  std::size_t pos = 0;
  for (int r = 0; r < shape_.rows(); ++r) {
    for (int c = 0; c < shape_.row_length(r); ++c) {
      cells_[static_cast<std::size_t>(word_[pos++] - start_)] = Cell{r, c};
    }
  }
}

StandardTableau StandardTableau::from_rows(const std::vector<std::vector<int>>& rows) {
  std::vector<int> lengths;
  std::vector<int> word;
  for (const auto& row : rows) {
    if (row.empty()) throw InputError("tableau rows must be non-empty");
    lengths.push_back(static_cast<int>(row.size()));
    word.insert(word.end(), row.begin(), row.end());
  }
  if (word.empty()) throw InputError("empty tableau");
  Partition shape(lengths);
  const int start = *std::min_element(word.begin(), word.end());
  std::vector<bool> seen(word.size(), false);
  for (int v : word) {
    const long offset = static_cast<long>(v) - start;
    if (offset >= static_cast<long>(word.size()) || seen[static_cast<std::size_t>(offset)]) {
      throw InputError("tableau entries must be a contiguous range, each used once");
    }
    seen[static_cast<std::size_t>(offset)] = true;
  }
  for (std::size_t r = 0; r < rows.size(); ++r) {
    for (std::size_t c = 0; c < rows[r].size(); ++c) {
      if (c > 0 && rows[r][c] <= rows[r][c - 1]) throw InputError("tableau rows must increase");
      if (r > 0 && rows[r][c] <= rows[r - 1][c]) throw InputError("tableau columns must increase");
    }
  }
  return StandardTableau(std::move(shape), start, std::move(word));
}

StandardTableau StandardTableau::parse(std::string_view text) {
  std::vector<std::vector<int>> rows;
  for (auto row_text : split(trim(text), '/')) {
    std::vector<int> row;
    std::istringstream in{std::string(row_text)};
    std::string token;
    while (in >> token) row.push_back(parse_int(token, "tableau"));
    rows.push_back(std::move(row));
  }
  return from_rows(rows);
}

Cell StandardTableau::position(int value) const {
  if (!contains(value)) {
    throw RangeError("value " + std::to_string(value) + " is not an entry of " + to_string());
  }
  return cells_[static_cast<std::size_t>(value - start_)];
}

int StandardTableau::entry(int row, int col) const {
  int offset = 0;
  for (int r = 0; r < row; ++r) offset += shape_.row_length(r);
  return word_.at(static_cast<std::size_t>(offset + col));
}

int StandardTableau::content(int value) const {
  const Cell cell = position(value);
  return cell.col - cell.row;
}

std::vector<std::vector<int>> StandardTableau::rows() const {
  std::vector<std::vector<int>> out;
  auto it = word_.begin();
  for (int len : shape_.parts()) {
    out.emplace_back(it, it + len);
    it += len;
  }
  return out;
}

std::string StandardTableau::to_string() const {
  std::string out;
  bool first_row = true;
  for (const auto& row : rows()) {
    if (!first_row) out += '/';
    first_row = false;
    for (std::size_t c = 0; c < row.size(); ++c) {
      if (c > 0) out += ' ';
      out += std::to_string(row[c]);
    }
  }
  return out;
}

StandardTableau StandardTableau::relabeled(int start) const {
  std::vector<int> word = word_;
  for (int& v : word) v += start - start_;
  return StandardTableau(shape_, start, std::move(word));
}

int axial_distance(const StandardTableau& m, int i) {
  return m.content(i + 1) - m.content(i);
}

StandardTableau apply_generator(const StandardTableau& m, int i) {
  const int d = axial_distance(m, i);
  // Adjacent in a row or a column: the swap breaks standardness.
  if (d == 1 || d == -1) return m;
  auto rows = m.rows();
  const Cell a = m.position(i);
  const Cell b = m.position(i + 1);
  std::swap(rows[static_cast<std::size_t>(a.row)][static_cast<std::size_t>(a.col)],
            rows[static_cast<std::size_t>(b.row)][static_cast<std::size_t>(b.col)]);
  return StandardTableau::from_rows(rows);
}

std::vector<StandardTableau> enumerate_standard_tableaux(const Partition& shape, int start) {
  if (start < 1) throw InputError("tableau entries must start at 1 or above");
  std::vector<StandardTableau> out;
  if (shape.empty()) return out;

  const int n = shape.size();
  std::vector<std::vector<int>> rows(static_cast<std::size_t>(shape.rows()));
  auto place = [&](auto&& self, int value) -> void {
    if (value == start + n) {
      out.push_back(StandardTableau::from_rows(rows));
      return;
    }
    for (int r = 0; r < shape.rows(); ++r) {
      auto& row = rows[static_cast<std::size_t>(r)];
      const auto len = static_cast<int>(row.size());
      if (len >= shape.row_length(r)) continue;
      if (r > 0 && static_cast<int>(rows[static_cast<std::size_t>(r - 1)].size()) <= len) continue;
      row.push_back(value);
      self(self, value + 1);
      row.pop_back();
    }
  };
  place(place, start);
  std::sort(out.begin(), out.end());
  return out;
}

// ---------------------------------------------------------------------------
// TableauPair

TableauPair::TableauPair(StandardTableau first_, StandardTableau second_)
    : first(std::move(first_)), second(std::move(second_)) {
  if (first.first_entry() != 1 || second.first_entry() != first.last_entry() + 1) {
    throw InputError("tableau pair must be filled by 1..k1 and k1+1..k1+k2");
  }
}

int axial_distance(const TableauPair& p, int i) {
  const int k1 = p.split();
  if (i == k1) {
    throw UndefinedActionError("g_" + std::to_string(i) +
                               " does not act on a pair split at " + std::to_string(k1));
  }
  return i < k1 ? axial_distance(p.first, i) : axial_distance(p.second, i);
}

TableauPair apply_generator(const TableauPair& p, int i) {
  const int k1 = p.split();
  if (i == k1) {
    throw UndefinedActionError("g_" + std::to_string(i) +
                               " does not act on a pair split at " + std::to_string(k1));
  }
  if (i < k1) return TableauPair(apply_generator(p.first, i), p.second);
  return TableauPair(p.first, apply_generator(p.second, i));
}

// ---------------------------------------------------------------------------
// TableauIndex

TableauIndex::TableauIndex(Partition shape, int start)
    : shape_(std::move(shape)), start_(start), tableaux_(enumerate_standard_tableaux(shape_, start)) {
  for (std::size_t k = 0; k < tableaux_.size(); ++k) lookup_.emplace(tableaux_[k].word(), k);
  const int generators = std::max(0, shape_.size() - 1);
  moves_.assign(static_cast<std::size_t>(generators), {});
  distances_.assign(static_cast<std::size_t>(generators), {});
  for (int g = 0; g < generators; ++g) {
    const int i = start_ + g;
    auto& mv = moves_[static_cast<std::size_t>(g)];
    auto& dist = distances_[static_cast<std::size_t>(g)];
    mv.resize(tableaux_.size());
    dist.resize(tableaux_.size());
    for (std::size_t k = 0; k < tableaux_.size(); ++k) {
      dist[k] = axial_distance(tableaux_[k], i);
      mv[k] = (dist[k] == 1 || dist[k] == -1) ? k : index_of(apply_generator(tableaux_[k], i));
    }
  }
}

std::size_t TableauIndex::index_of(const StandardTableau& t) const {
  const auto it = lookup_.find(t.word());
  if (it == lookup_.end() || t.first_entry() != start_) {
    throw InputError("tableau " + t.to_string() + " is not a standard tableau of shape " +
                     shape_.to_string());
  }
  return it->second;
}

std::size_t TableauIndex::slot(int i) const {
  if (!acts(i)) {
    throw RangeError("g_" + std::to_string(i) + " does not act on entries " +
                     std::to_string(start_) + ".." + std::to_string(last_entry()));
  }
  return static_cast<std::size_t>(i - start_);
}

std::size_t TableauIndex::move(std::size_t index, int i) const { return moves_[slot(i)][index]; }

int TableauIndex::distance(std::size_t index, int i) const { return distances_[slot(i)][index]; }

}  // namespace subduce
