#include "block_space.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>

#include "union_find.hpp"

namespace subduce::detail {

namespace {

constexpr double kZeroEntry = 1e-14;
constexpr auto kNone = static_cast<std::size_t>(-1);

// Orthonormal basis of the column span of `columns`.
Eigen::MatrixXd range_basis(const Eigen::MatrixXd& columns, double cutoff) {
  if (columns.cols() == 0) return columns;
  Eigen::BDCSVD<Eigen::MatrixXd> svd(columns, Eigen::ComputeThinU);
  const auto& sv = svd.singularValues();
  const double threshold = cutoff * std::max(sv(0), 1.0);
  Eigen::Index rank = 0;
  while (rank < sv.size() && sv(rank) > threshold) ++rank;
  return svd.matrixU().leftCols(rank);
}

}  // namespace

Eigen::MatrixXd nullspace(const Eigen::MatrixXd& m, double cutoff, double scale) {
  const Eigen::Index k = m.cols();
  if (m.rows() == 0 || k == 0) return Eigen::MatrixXd::Identity(k, k);
  Eigen::BDCSVD<Eigen::MatrixXd> svd(m, Eigen::ComputeFullV);
  const auto& sv = svd.singularValues();
  const double threshold = cutoff * std::max(sv.size() > 0 ? sv(0) : 0.0, scale);
  Eigen::Index rank = 0;
  while (rank < sv.size() && sv(rank) > threshold) ++rank;
  return svd.matrixV().rightCols(k - rank);
}

BlockSpace BlockSpace::whole(std::size_t ambient) {
  BlockSpace space;
  space.ambient_ = ambient;
  space.blocks_.reserve(ambient);
  for (std::size_t node = 0; node < ambient; ++node) {
    space.blocks_.push_back(Block{{node}, Eigen::MatrixXd::Identity(1, 1)});
  }
  return space;
}

BlockSpace BlockSpace::from_basis(const SubspaceBasis& basis, double cutoff) {
  BlockSpace space;
  space.ambient_ = basis.ambient;
  // Group vectors whose supports overlap.
  UnionFind groups(basis.dim());
  std::vector<std::size_t> first_vector(basis.ambient, kNone);
  for (std::size_t v = 0; v < basis.dim(); ++v) {
    for (const auto& [node, x] : basis.vectors[v].entries) {
      if (first_vector[node] == kNone) {
        first_vector[node] = v;
      } else {
        groups.unite(first_vector[node], v);
      }
    }
  }
  std::map<std::size_t, std::vector<std::size_t>> members;
  for (std::size_t v = 0; v < basis.dim(); ++v) members[groups.find(v)].push_back(v);
  for (const auto& [root, vs] : members) {
    std::vector<std::size_t> nodes;
    for (std::size_t v : vs)
      for (const auto& e : basis.vectors[v].entries) nodes.push_back(e.first);
    std::sort(nodes.begin(), nodes.end());
    nodes.erase(std::unique(nodes.begin(), nodes.end()), nodes.end());
    Eigen::MatrixXd local = Eigen::MatrixXd::Zero(static_cast<Eigen::Index>(nodes.size()),
                                                  static_cast<Eigen::Index>(vs.size()));
    for (std::size_t c = 0; c < vs.size(); ++c) {
      for (const auto& [node, x] : basis.vectors[vs[c]].entries) {
        const auto row = std::lower_bound(nodes.begin(), nodes.end(), node) - nodes.begin();
        local(row, static_cast<Eigen::Index>(c)) = x;
      }
    }
    space.store(nodes, range_basis(local, cutoff), space.blocks_);
  }
  std::sort(space.blocks_.begin(), space.blocks_.end(),
            [](const Block& a, const Block& b) { return a.nodes.front() < b.nodes.front(); });
  return space;
}

std::size_t BlockSpace::dim() const {
  std::size_t total = 0;
  for (const auto& b : blocks_) total += static_cast<std::size_t>(b.basis.cols());
  return total;
}

std::size_t BlockSpace::largest_block() const {
  std::size_t largest = 0;
  for (const auto& b : blocks_) largest = std::max(largest, b.nodes.size());
  return largest;
}

void BlockSpace::store(const std::vector<std::size_t>& nodes, const Eigen::MatrixXd& basis,
                       std::vector<Block>& out) const {
  const Eigen::Index cols = basis.cols();
  if (cols == 0) return;
  UnionFind columns(static_cast<std::size_t>(cols));
  std::vector<bool> live(nodes.size(), false);
  for (std::size_t r = 0; r < nodes.size(); ++r) {
    Eigen::Index first = -1;
    for (Eigen::Index c = 0; c < cols; ++c) {
      if (std::abs(basis(static_cast<Eigen::Index>(r), c)) <= kZeroEntry) continue;
      live[r] = true;
      if (first < 0) {
        first = c;
      } else {
        columns.unite(static_cast<std::size_t>(first), static_cast<std::size_t>(c));
      }
    }
  }
  std::map<std::size_t, std::vector<Eigen::Index>> groups;
  for (Eigen::Index c = 0; c < cols; ++c) groups[columns.find(static_cast<std::size_t>(c))].push_back(c);
  for (const auto& [root, cs] : groups) {
    std::vector<Eigen::Index> rows;
    for (std::size_t r = 0; r < nodes.size(); ++r) {
      if (!live[r]) continue;
      const bool touches = std::any_of(cs.begin(), cs.end(), [&](Eigen::Index c) {
        return std::abs(basis(static_cast<Eigen::Index>(r), c)) > kZeroEntry;
      });
      if (touches) rows.push_back(static_cast<Eigen::Index>(r));
    }
    Block block;
    block.basis.resize(static_cast<Eigen::Index>(rows.size()), static_cast<Eigen::Index>(cs.size()));
    for (std::size_t r = 0; r < rows.size(); ++r) {
      block.nodes.push_back(nodes[static_cast<std::size_t>(rows[r])]);
      for (std::size_t c = 0; c < cs.size(); ++c) {
        block.basis(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) = basis(rows[r], cs[c]);
      }
    }
    out.push_back(std::move(block));
  }
}

void BlockSpace::impose(const std::vector<LocalConstraint>& constraints, double cutoff) {
  const std::size_t nblocks = blocks_.size();
  std::vector<std::size_t> owner(ambient_, kNone);
  std::vector<Eigen::Index> row_in_block(ambient_, 0);
  for (std::size_t b = 0; b < nblocks; ++b) {
    for (std::size_t r = 0; r < blocks_[b].nodes.size(); ++r) {
      owner[blocks_[b].nodes[r]] = b;
      row_in_block[blocks_[b].nodes[r]] = static_cast<Eigen::Index>(r);
    }
  }

  // Items 0..nblocks-1 are blocks, nblocks + c is constraint c.
  UnionFind components(nblocks + constraints.size());
  std::vector<bool> active(constraints.size(), false);
  for (std::size_t c = 0; c < constraints.size(); ++c) {
    for (std::size_t node : constraints[c].nodes) {
      if (owner[node] == kNone) continue;
      active[c] = true;
      components.unite(nblocks + c, owner[node]);
    }
  }
  std::map<std::size_t, std::pair<std::vector<std::size_t>, std::vector<std::size_t>>> parts;
  for (std::size_t b = 0; b < nblocks; ++b) parts[components.find(b)].first.push_back(b);
  for (std::size_t c = 0; c < constraints.size(); ++c) {
    if (active[c]) parts[components.find(nblocks + c)].second.push_back(c);
  }

  std::vector<Block> next;
  next.reserve(nblocks);
  std::vector<Eigen::Index> col_offset(nblocks, 0);
  for (auto& [root, part] : parts) {
    auto& [bs, cs] = part;
    if (cs.empty()) {
      for (std::size_t b : bs) next.push_back(std::move(blocks_[b]));
      continue;
    }
    Eigen::Index cols = 0;
    for (std::size_t b : bs) {
      col_offset[b] = cols;
      cols += blocks_[b].basis.cols();
    }
    Eigen::Index rows = 0;
    double scale = 0;
    for (std::size_t c : cs) {
      rows += constraints[c].rows.rows();
      scale = std::max(scale, constraints[c].rows.rowwise().norm().maxCoeff());
    }
    // Constraint rows applied to the block bases.
    Eigen::MatrixXd m = Eigen::MatrixXd::Zero(rows, cols);
    Eigen::Index row0 = 0;
    for (std::size_t c : cs) {
      const auto& con = constraints[c];
      for (std::size_t j = 0; j < con.nodes.size(); ++j) {
        const std::size_t b = owner[con.nodes[j]];
        if (b == kNone) continue;
        const Eigen::Index k = blocks_[b].basis.cols();
        m.block(row0, col_offset[b], con.rows.rows(), k) +=
            con.rows.col(static_cast<Eigen::Index>(j)) * blocks_[b].basis.row(row_in_block[con.nodes[j]]);
      }
      row0 += con.rows.rows();
    }
    const Eigen::MatrixXd null = nullspace(m, cutoff, scale);
    if (null.cols() == 0) continue;

    std::vector<std::size_t> nodes;
    for (std::size_t b : bs) nodes.insert(nodes.end(), blocks_[b].nodes.begin(), blocks_[b].nodes.end());
    Eigen::MatrixXd basis(static_cast<Eigen::Index>(nodes.size()), null.cols());
    Eigen::Index r0 = 0;
    for (std::size_t b : bs) {
      const auto& blk = blocks_[b];
      const auto nr = static_cast<Eigen::Index>(blk.nodes.size());
      basis.middleRows(r0, nr) = blk.basis * null.middleRows(col_offset[b], blk.basis.cols());
      r0 += nr;
    }
    // Sort rows by node so blocks keep sorted node lists.
    std::vector<std::size_t> order(nodes.size());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) { return nodes[x] < nodes[y]; });
    std::vector<std::size_t> sorted_nodes(nodes.size());
    Eigen::MatrixXd sorted_basis(basis.rows(), basis.cols());
    for (std::size_t k = 0; k < order.size(); ++k) {
      sorted_nodes[k] = nodes[order[k]];
      sorted_basis.row(static_cast<Eigen::Index>(k)) = basis.row(static_cast<Eigen::Index>(order[k]));
    }
    store(sorted_nodes, sorted_basis, next);
  }
  std::sort(next.begin(), next.end(), [](const Block& a, const Block& b) { return a.nodes.front() < b.nodes.front(); });
  blocks_ = std::move(next);
}

void BlockSpace::intersect_with(const SubspaceBasis& other, double cutoff) {
  const BlockSpace target = from_basis(other, cutoff);
  std::vector<LocalConstraint> constraints;
  std::vector<bool> covered(ambient_, false);
  // Membership in span(Q): (1 - Q Q^T) x = 0 on Q's nodes.
  for (const auto& blk : target.blocks_) {
    const auto size = static_cast<Eigen::Index>(blk.nodes.size());
    constraints.push_back(
        {blk.nodes, Eigen::MatrixXd::Identity(size, size) - blk.basis * blk.basis.transpose()});
    for (std::size_t node : blk.nodes) covered[node] = true;
  }
  // Outside its support the other space is zero.
  for (const auto& blk : blocks_) {
    for (std::size_t node : blk.nodes) {
      if (!covered[node]) constraints.push_back({{node}, Eigen::MatrixXd::Ones(1, 1)});
    }
  }
  impose(constraints, cutoff);
}

SubspaceBasis BlockSpace::to_basis(std::string label) const {
  SubspaceBasis out;
  out.ambient = ambient_;
  out.label = std::move(label);
  for (const auto& blk : blocks_) {
    for (Eigen::Index c = 0; c < blk.basis.cols(); ++c) {
      SparseVec v;
      v.length = ambient_;
      for (std::size_t r = 0; r < blk.nodes.size(); ++r) {
        const double x = blk.basis(static_cast<Eigen::Index>(r), c);
        if (std::abs(x) > kZeroEntry) v.entries.emplace_back(blk.nodes[r], x);
      }
      out.vectors.push_back(std::move(v));
    }
  }
  return out;
}

}  // namespace subduce::detail
