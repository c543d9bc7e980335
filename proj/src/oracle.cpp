#include "grundy/oracle.hpp"

#include <algorithm>
#include <bit>
#include <sstream>
#include <unordered_map>

#include "grundy/errors.hpp"

namespace grundy {

std::string SequenceViolation::describe() const {
  std::ostringstream os;
  if (kind == Kind::empty_private_neighborhood) {
    os << "empty private neighborhood at position " << position;
  } else {
    os << "not dominating; undominated {";
    for (std::size_t i = 0; i < undominated.size(); ++i) os << (i ? "," : "") << undominated[i];
    os << "}";
  }
  return os.str();
}

VerifyResult verify_sequence(const Graph& g, const VertexSequence& s) {
  const int n = g.order();
  for (Vertex v : s) {
    if (!g.contains(v)) throw InputError("sequence vertex " + std::to_string(v) + " out of range");
  }
  FootprintCertificate cert;
  cert.sequence = s;
  cert.footprinter.assign(static_cast<std::size_t>(n), 0);
  for (std::size_t i = 0; i < s.size(); ++i) {
    VertexSet fresh;
    for (Vertex w : g.closed_neighborhood(s[i])) {
      if (cert.footprinter[w - 1] == 0) {
        cert.footprinter[w - 1] = s[i];
        fresh.push_back(w);
      }
    }
    if (fresh.empty()) {
      SequenceViolation bad;
      bad.kind = SequenceViolation::Kind::empty_private_neighborhood;
      bad.position = i + 1;
      return bad;
    }
    cert.private_sets.push_back(std::move(fresh));
  }
  SequenceViolation missing;
  for (Vertex v = 1; v <= n; ++v) {
    if (cert.footprinter[v - 1] == 0) missing.undominated.push_back(v);
    else if (cert.footprinter[v - 1] == v) cert.self_set.push_back(v);
  }
  if (!missing.undominated.empty()) return missing;
  return cert;
}

namespace {

using Mask = std::uint64_t;

constexpr int kMaxBits = 63;
constexpr std::int8_t kUnknown = -1;
constexpr std::int8_t kInfeasible = -2;

Mask bit(Vertex v) { return Mask{1} << (v - 1); }

void check_threshold(const Graph& g, const OracleOptions& options, const char* what) {
  const int cap = std::min(options.max_n, kMaxBits);
  if (g.order() > cap) {
    throw ThresholdError(std::string(what) + ": n=" + std::to_string(g.order()) + " exceeds oracle threshold " +
                         std::to_string(cap));
  }
}

std::vector<Mask> closed_masks(const Graph& g) {
  std::vector<Mask> out(static_cast<std::size_t>(g.order()) + 1, 0);
  for (Vertex v = 1; v <= g.order(); ++v) {
    out[v] = bit(v);
    for (Vertex w : g.neighbors(v)) out[v] |= bit(w);
  }
  return out;
}

// Exhaustive search over dominated sets. The longest continuation of a
// partial sequence depends only on the set D it already dominates: used
// vertices have N[v] inside D and can never be legal again. With a required
// self-footprint set I, a move v is allowed iff it footprints itself exactly
// when v is in I and it does not dominate any other vertex of I still
// waiting to footprint itself.
class DominationSearch {
 public:
  DominationSearch(const Graph& g, std::optional<Mask> required_self, const OracleOptions& options)
      : n_(g.order()),
        full_(n_ == 0 ? 0 : (n_ == 64 ? ~Mask{0} : (Mask{1} << n_) - 1)),
        closed_(closed_masks(g)),
        required_(required_self),
        memo_limit_(options.memo_limit) {
    if (n_ <= 30 && (std::size_t{1} << n_) <= memo_limit_) {
      dense_.assign(std::size_t{1} << n_, kUnknown);
    }
  }

  bool allowed(Mask dominated, Vertex v) const {
    const Mask fresh = closed_[v] & ~dominated;
    if (fresh == 0) return false;
    if (!required_) return true;
    const bool self = (fresh & bit(v)) != 0;
    if (self && (*required_ & bit(v)) == 0) return false;
    return (fresh & *required_ & ~bit(v)) == 0;
  }

  // Longest continuation from `dominated`, or kInfeasible.
  int best(Mask dominated) {
    if (dominated == full_) return 0;
    if (auto cached = lookup(dominated); cached != kUnknown) return cached;
    // Each further step footprints at least one new vertex.
    const int bound = n_ - std::popcount(dominated);
    int result = kInfeasible;
    for (Vertex v = 1; v <= n_ && result < bound; ++v) {
      if (!allowed(dominated, v)) continue;
      const int tail = best(dominated | closed_[v]);
      if (tail != kInfeasible) result = std::max(result, tail + 1);
    }
    store(dominated, static_cast<std::int8_t>(result));
    return result;
  }

  std::optional<GrundyResult> solve() {
    const int total = best(0);
    if (total == kInfeasible) return std::nullopt;
    GrundyResult out;
    out.gamma = total;
    Mask dominated = 0;
    int remaining = total;
    while (remaining > 0) {
      for (Vertex v = 1; v <= n_; ++v) {
        if (!allowed(dominated, v)) continue;
        const int tail = best(dominated | closed_[v]);
        if (tail != kInfeasible && tail + 1 == remaining) {
          out.witness.append(v);
          dominated |= closed_[v];
          --remaining;
          break;
        }
      }
    }
    return out;
  }

 private:
  std::int8_t lookup(Mask key) const {
    if (!dense_.empty()) return dense_[key];
    auto it = sparse_.find(key);
    return it == sparse_.end() ? kUnknown : it->second;
  }

  void store(Mask key, std::int8_t value) {
    if (!dense_.empty()) {
      dense_[key] = value;
    } else if (sparse_.size() < memo_limit_) {
      sparse_.emplace(key, value);
    }
  }

  int n_;
  Mask full_;
  std::vector<Mask> closed_;
  std::optional<Mask> required_;
  std::size_t memo_limit_;
  std::vector<std::int8_t> dense_;
  std::unordered_map<Mask, std::int8_t> sparse_;
};

}  // namespace

GrundyResult gamma_gr_exact(const Graph& g, const OracleOptions& options) {
  check_threshold(g, options, "gamma_gr_exact");
  if (g.order() == 0) return {};
  DominationSearch search(g, std::nullopt, options);
  auto result = search.solve();
  if (!result) throw InternalError("gamma_gr_exact: search found no legal sequence");
  return *result;
}

std::optional<GrundyResult> gamma_gr_given_I(const Graph& g, const VertexSet& independent,
                                             const OracleOptions& options) {
  check_threshold(g, options, "gamma_gr_given_I");
  if (!is_independent(g, independent)) throw InputError("gamma_gr_given_I: set is not independent");
  Mask required = 0;
  for (Vertex v : independent) required |= bit(v);
  if (g.order() == 0) return independent.empty() ? std::optional<GrundyResult>(GrundyResult{}) : std::nullopt;
  DominationSearch search(g, required, options);
  return search.solve();
}

int gamma_gr_rooted(const Graph& g, Vertex u, const OracleOptions& options) {
  check_threshold(g, options, "gamma_gr_rooted");
  if (!g.contains(u)) throw InputError("gamma_gr_rooted: vertex " + std::to_string(u) + " out of range");
  int best = 0;
  for_each_independent_set(
      g, 1,
      [&](const VertexSet& s) {
        if (std::binary_search(s.begin(), s.end(), u)) {
          if (auto r = gamma_gr_given_I(g, s, options)) best = std::max(best, r->gamma);
        }
        return true;
      },
      std::min(options.max_n, kMaxBits));
  return best;
}

void for_each_legal_sequence(const Graph& g, const std::function<bool(const VertexSequence&)>& visit,
                             const OracleOptions& options) {
  check_threshold(g, options, "for_each_legal_sequence");
  const int n = g.order();
  const auto closed = closed_masks(g);
  const Mask full = n == 0 ? 0 : (Mask{1} << n) - 1;
  std::vector<Vertex> current;
  bool stop = false;
  std::function<void(Mask)> walk = [&](Mask dominated) {
    if (dominated == full) {
      if (!visit(VertexSequence(current))) stop = true;
      return;
    }
    for (Vertex v = 1; v <= n && !stop; ++v) {
      if ((closed[v] & ~dominated) == 0) continue;
      current.push_back(v);
      walk(dominated | closed[v]);
      current.pop_back();
    }
  };
  walk(0);
}

}  // namespace grundy
