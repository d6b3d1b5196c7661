#include "wagner/nielsen.hpp"

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <sstream>
#include <unordered_map>
#include <utility>

namespace wagner {
namespace {

// ---------------------------------------------------------------------------
// Tail boundary words never need independent storage: for the occurrence of
// a_i^e at position t of u = phi(a_i), both tail words are prefixes of u or
// of u^{-1} (w = u[1..t-1] or u[1..t]; wbar = prefix of u^{-1} of length
// |u|-t or |u|-t+1).  Tails are therefore classified through (word id,
// prefix length) views with rolling hashes, and only materialized into
// Words on demand.  This keeps phi^n classification linear in total image
// length instead of quadratic.
// ---------------------------------------------------------------------------

constexpr int kEmptyRef = -1;

struct View {
  int ref = kEmptyRef;   // index into TailContext::words, or kEmptyRef
  std::size_t len = 0;   // prefix length (0 <=> empty word)
};

struct ViewTail {
  View w;
  View wbar;
  int index = 0;
  std::optional<TailOrigin> origin;
  bool inside_remnant = false;
};

std::uint64_t mix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ull;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
  return x ^ (x >> 31);
}

struct TailContext {
  std::vector<Word> words;  // u_1..u_m then u_1^{-1}..u_m^{-1}
  std::vector<std::vector<std::uint64_t>> prefix_hash;  // len+1 entries each
  std::vector<ViewTail> tails;
  RemnantDecomposition decomposition{std::vector<std::optional<RemnantSpan>>{}};

  std::uint64_t hash_of(View v) const {
    return v.ref == kEmptyRef ? 0 : prefix_hash[static_cast<std::size_t>(v.ref)][v.len];
  }

  Letter letter_at(View v, std::size_t k) const {
    return words[static_cast<std::size_t>(v.ref)].at(k);
  }

  bool views_equal(View a, View b) const {
    if (a.len != b.len) return false;
    if (a.len == 0) return true;
    if (a.ref == b.ref) return true;
    if (hash_of(a) != hash_of(b)) return false;
    for (std::size_t k = 0; k < a.len; ++k) {
      if (letter_at(a, k) != letter_at(b, k)) return false;
    }
    return true;
  }

  Word materialize(View v) const {
    if (v.ref == kEmptyRef || v.len == 0) return Word();
    std::span<const Letter> src = words[static_cast<std::size_t>(v.ref)].letters();
    return Word::from_reduced(std::vector<Letter>(src.begin(), src.begin() + static_cast<std::ptrdiff_t>(v.len)));
  }
};

TailContext build_tail_context(const Endomorphism& phi) {
  const int m = phi.rank();
  TailContext ctx;
  ctx.decomposition = remnant_decomposition(phi);

  ctx.words.reserve(static_cast<std::size_t>(2 * m));
  std::size_t max_len = 0;
  for (int i = 1; i <= m; ++i) {
    ctx.words.push_back(phi.image(i));
    max_len = std::max(max_len, phi.image(i).length());
  }
  for (int i = 1; i <= m; ++i) ctx.words.push_back(phi.image(i).inverse());

  // Rolling polynomial hashes over Z/2^64 with a fixed odd multiplier;
  // exact comparison backs every hash match, so collisions only cost time.
  std::vector<std::uint64_t> pow(max_len + 1);
  pow[0] = 1;
  constexpr std::uint64_t kMult = 0x9E3779B97F4A7C15ull | 1ull;
  for (std::size_t k = 1; k <= max_len; ++k) pow[k] = pow[k - 1] * kMult;
  ctx.prefix_hash.reserve(ctx.words.size());
  for (const Word& w : ctx.words) {
    std::vector<std::uint64_t> h(w.length() + 1, 0);
    for (std::size_t k = 0; k < w.length(); ++k) {
      h[k + 1] = h[k] + mix64(static_cast<std::uint64_t>(static_cast<std::int64_t>(w.at(k).code()))) * pow[k];
    }
    ctx.prefix_hash.push_back(std::move(h));
  }

  ctx.tails.push_back(ViewTail{View{}, View{}, +1, std::nullopt, false});
  for (int i = 1; i <= m; ++i) {
    const Word& u = phi.image(i);
    const std::size_t L = u.length();
    const int ref_u = i - 1;
    const int ref_uinv = m + i - 1;
    const auto& span = ctx.decomposition.span(i);
    for (std::size_t t = 1; t <= L; ++t) {
      Letter l = u.at(t - 1);
      if (l.generator() != i) continue;
      ViewTail tail;
      if (l.sign() > 0) {
        tail.w = View{ref_u, t - 1};
        tail.wbar = View{ref_uinv, L - t};
        tail.index = -1;
      } else {
        tail.w = View{ref_u, t};
        tail.wbar = View{ref_uinv, L - t + 1};
        tail.index = +1;
      }
      tail.origin = TailOrigin{i, t, l.sign()};
      tail.inside_remnant = span.has_value() && span->strictly_contains(t);
      ctx.tails.push_back(tail);
    }
  }
  return ctx;
}

struct UnionFind {
  std::vector<std::size_t> parent;
  std::vector<std::size_t> size;

  explicit UnionFind(std::size_t n) : parent(n), size(n, 1) {
    std::iota(parent.begin(), parent.end(), std::size_t{0});
  }

  std::size_t find(std::size_t x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  }

  void unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return;
    if (size[a] < size[b]) std::swap(a, b);
    parent[b] = a;
    size[a] += size[b];
  }
};

}  // namespace

std::vector<WagnerTail> wagner_tails(const Endomorphism& phi) {
  TailContext ctx = build_tail_context(phi);
  std::vector<WagnerTail> out;
  out.reserve(ctx.tails.size());
  for (const ViewTail& t : ctx.tails) {
    out.push_back(WagnerTail{ctx.materialize(t.w), ctx.materialize(t.wbar),
                             t.index, t.origin, t.inside_remnant});
  }
  return out;
}

bool directly_related(const WagnerTail& t1, const WagnerTail& t2) {
  return t1.w == t2.w || t1.w == t2.wbar || t1.wbar == t2.w || t1.wbar == t2.wbar;
}

FixedPointClassPartition::FixedPointClassPartition(
    std::vector<TailSummary> tails, std::vector<std::vector<std::size_t>> classes,
    bool remnant_complete)
    : tails_(std::move(tails)),
      classes_(std::move(classes)),
      remnant_complete_(remnant_complete) {
  index_sums_.reserve(classes_.size());
  for (std::size_t c = 0; c < classes_.size(); ++c) {
    long long sum = 0;
    for (std::size_t t : classes_[c]) {
      sum += tails_[t].index;
      tails_[t].class_id = c;
    }
    index_sums_.push_back(sum);
  }
}

std::size_t FixedPointClassPartition::essential_class_count() const {
  return static_cast<std::size_t>(
      std::count_if(index_sums_.begin(), index_sums_.end(),
                    [](long long s) { return s != 0; }));
}

std::size_t FixedPointClassPartition::isolated_tail_count() const {
  return static_cast<std::size_t>(
      std::count_if(classes_.begin(), classes_.end(),
                    [](const auto& c) { return c.size() == 1; }));
}

std::size_t FixedPointClassPartition::inside_remnant_count() const {
  return static_cast<std::size_t>(
      std::count_if(tails_.begin(), tails_.end(),
                    [](const TailSummary& t) { return t.inside_remnant; }));
}

long long FixedPointClassPartition::total_index() const {
  return std::accumulate(index_sums_.begin(), index_sums_.end(), 0ll);
}

FixedPointClassPartition fixed_point_classes(const Endomorphism& phi) {
  TailContext ctx = build_tail_context(phi);
  const std::size_t n = ctx.tails.size();
  UnionFind uf(n);

  // Tails sharing a boundary word are directly related; bucket every view by
  // (length, hash), then union within the exact-equality groups of a bucket.
  struct Group {
    View rep;
    std::size_t tail;
  };
  std::unordered_map<std::uint64_t, std::vector<Group>> buckets;
  buckets.reserve(2 * n);
  auto feed = [&](View v, std::size_t tail) {
    std::uint64_t key = mix64(ctx.hash_of(v) ^ (static_cast<std::uint64_t>(v.len) << 1));
    auto& groups = buckets[key];
    for (const Group& g : groups) {
      if (ctx.views_equal(v, g.rep)) {
        uf.unite(tail, g.tail);
        return;
      }
    }
    groups.push_back(Group{v, tail});
  };
  for (std::size_t t = 0; t < n; ++t) {
    feed(ctx.tails[t].w, t);
    feed(ctx.tails[t].wbar, t);
  }

  // Classes ordered by their smallest tail; tails keep construction order
  // (BASE, then generator-major, position-minor).
  std::unordered_map<std::size_t, std::size_t> root_to_class;
  std::vector<std::vector<std::size_t>> classes;
  for (std::size_t t = 0; t < n; ++t) {
    std::size_t root = uf.find(t);
    auto [it, inserted] = root_to_class.try_emplace(root, classes.size());
    if (inserted) classes.emplace_back();
    classes[it->second].push_back(t);
  }

  std::vector<TailSummary> summaries;
  summaries.reserve(n);
  for (const ViewTail& t : ctx.tails) {
    summaries.push_back(TailSummary{t.index, t.origin, t.inside_remnant, 0});
  }
  return FixedPointClassPartition(std::move(summaries), std::move(classes),
                                  ctx.decomposition.complete());
}

namespace {

FixedPointClassPartition partition_requiring_remnant(const Endomorphism& phi) {
  FixedPointClassPartition partition = fixed_point_classes(phi);
  if (!partition.remnant_complete()) {
    throw NoRemnantError(
        "endomorphism has no remnant; Wagner's theorem does not certify the "
        "class count",
        std::move(partition));
  }
  return partition;
}

}  // namespace

std::size_t nielsen_number(const Endomorphism& phi) {
  return partition_requiring_remnant(phi).essential_class_count();
}

std::size_t isolated_tail_count(const Endomorphism& phi) {
  return partition_requiring_remnant(phi).isolated_tail_count();
}

std::size_t w_count(const Endomorphism& phi) {
  return partition_requiring_remnant(phi).inside_remnant_count();
}

long long lefschetz_number(const Endomorphism& phi) {
  long long trace = 0;
  for (int i = 1; i <= phi.rank(); ++i) {
    trace += signed_letter_count(phi.image(i), i);
  }
  return 1 - trace;
}

}  // namespace wagner
