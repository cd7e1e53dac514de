#include <algorithm>
#include <cstdint>
#include <deque>
#include <string>
#include <utility>

#include "one_page_kernel.hpp"
#include "orspan/error.hpp"
#include "orspan/spanners_1d.hpp"

namespace orspan {

namespace {

struct Entry {
  std::vector<Arc> back;
  double dilation = kInfinity;
};

// Memoized table oE(l, l', r', r): the best back-edge set on points l..r whose
// face on the first baseline edge has apex l' (back edge (l', l)) and whose
// face on the last baseline edge has apex r' (back edge (r, r')).
class Table {
 public:
  explicit Table(const PointSet& points)
      : n_(points.size()),
        xs_(n_),
        slot_(n_ * n_ * n_ * n_, kUnknown),
        leftmost_in_(n_, detail::kNone),
        rightmost_out_(n_, detail::kNone) {
    for (Index i = 0; i < n_; ++i) xs_[i] = points.coord(i);
  }

  // Returns nullptr for invalid parameter combinations.
  const Entry* solve(Index l, Index lp, Index rp, Index r) {
    if (r < l + 2) return nullptr;
    if (lp < l + 2 || lp > r || rp < l || rp + 2 > r) return nullptr;
    std::int32_t& slot = slot_[((l * n_ + lp) * n_ + rp) * n_ + r];
    if (slot == kInvalid) return nullptr;
    if (slot >= 0) return &entries_[static_cast<std::size_t>(slot)];

    Entry best;
    bool found = false;
    const auto consider = [&](std::vector<Arc> back) {
      back.push_back({r, l});
      const double d = score(l, r, back);
      if (!found || d < best.dilation) {
        best.back = std::move(back);
        best.dilation = d;
        found = true;
      }
    };

    if (lp == r && rp == l) {
      if (r == l + 2) consider({});
    } else if (lp < r && rp > l && lp > rp) {
      // (l', l) and (r, r') cross.
    } else if (lp < r && rp == l) {
      for (Index kr = l; kr + 3 <= r; ++kr) {
        if (const Entry* sub = solve(l, lp, kr, r - 1)) consider(sub->back);
      }
    } else if (lp == r && rp > l) {
      for (Index kl = l + 3; kl <= r; ++kl) {
        if (const Entry* sub = solve(l + 1, kl, rp, r)) consider(sub->back);
      }
    } else {
      for (Index kr = l; kr + 4 <= r; ++kr) {
        for (Index k = std::max(l + 2, kr + 2); k + 2 <= r; ++k) {
          const Entry* left = solve(l, lp, kr, k);
          if (left == nullptr) continue;
          for (Index kl = k + 2; kl <= r; ++kl) {
            const Entry* right = solve(k, kl, rp, r);
            if (right == nullptr) continue;
            std::vector<Arc> back = left->back;
            back.insert(back.end(), right->back.begin(), right->back.end());
            consider(std::move(back));
          }
        }
      }
    }

    if (!found) {
      slot = kInvalid;
      return nullptr;
    }
    slot = static_cast<std::int32_t>(entries_.size());
    entries_.push_back(std::move(best));
    return &entries_.back();
  }

 private:
  static constexpr std::int32_t kUnknown = -1;
  static constexpr std::int32_t kInvalid = -2;

  // Dilation of points l..r with their own baseline plus `back`.
  double score(Index l, Index r, const std::vector<Arc>& back) {
    for (const Arc& a : back) {
      leftmost_in_[a.to] = std::min(leftmost_in_[a.to], a.from);
      if (rightmost_out_[a.from] == detail::kNone || a.to > rightmost_out_[a.from]) {
        rightmost_out_[a.from] = a.to;
      }
    }
    const double d =
        detail::one_page_dilation(xs_, l, r, leftmost_in_, rightmost_out_).dilation;
    for (const Arc& a : back) {
      leftmost_in_[a.to] = detail::kNone;
      rightmost_out_[a.from] = detail::kNone;
    }
    return d;
  }

  std::size_t n_;
  std::vector<double> xs_;
  std::vector<std::int32_t> slot_;
  // Stable addresses: solve() hands out pointers while recursing.
  std::deque<Entry> entries_;
  std::vector<Index> leftmost_in_;
  std::vector<Index> rightmost_out_;
};

}  // namespace

Optimal1ppb optimal_1ppb(const PointSet& points, Optimal1ppbOptions options) {
  if (points.dim() != 1) {
    throw Error(ErrorCode::dimension_mismatch, "a 1D point set is required");
  }
  const std::size_t n = points.size();
  if (n < 3) throw Error(ErrorCode::too_few_points, "no oriented spanners for |P| < 3");
  if (!points.sorted_ascending()) {
    throw Error(ErrorCode::not_sorted, "1D points must be sorted ascending");
  }
  if (n > options.max_points) {
    throw Error(ErrorCode::guard_exceeded, "optimal 1-PPB search limited to " +
                                               std::to_string(options.max_points) +
                                               " points, got " + std::to_string(n));
  }

  Table table(points);
  const Entry* best = nullptr;
  for (Index lp = 2; lp < n; ++lp) {
    for (Index rp = 0; rp + 3 <= n; ++rp) {
      const Entry* e = table.solve(0, lp, rp, n - 1);
      if (e != nullptr && (best == nullptr || e->dilation < best->dilation)) best = e;
    }
  }
  OneppbGraph graph = OneppbGraph::from_back_edges(points, best->back);
  const double dilation = dilation_1ppb(graph).dilation;
  return Optimal1ppb{std::move(graph), dilation};
}

}  // namespace orspan
