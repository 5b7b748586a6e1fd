#include "famdd/oracle.hpp"

#include <algorithm>
#include <stdexcept>

#include "famdd/rand_util.hpp"

namespace famdd {

namespace {

constexpr std::size_t enumeration_limit = 16;

void check_enumerable(const ExplicitFamily& f, const char* what) {
  if (f.universe_size() > enumeration_limit)
    throw std::invalid_argument(std::string("oracle ") + what +
                                ": universe too large for candidate enumeration");
}

const ExplicitFamily& need_g(OpKind op, const ExplicitFamily* g) {
  if (g == nullptr)
    throw std::invalid_argument(std::string("oracle ") + std::string(op_name(op)) +
                                ": missing second operand");
  return *g;
}

ExplicitFamily with_masks(const ExplicitFamily& like, std::vector<std::uint64_t> masks) {
  return ExplicitFamily(like.universe(), std::move(masks));
}

ExplicitFamily pairwise(const ExplicitFamily& f, const ExplicitFamily& g,
                        auto keep, auto combine) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t a : f.masks())
    for (std::uint64_t b : g.masks())
      if (keep(a, b)) out.push_back(combine(a, b));
  return with_masks(f, std::move(out));
}

ExplicitFamily filter(const ExplicitFamily& f, auto pred) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t a : f.masks())
    if (pred(a)) out.push_back(a);
  return with_masks(f, std::move(out));
}

bool subset(std::uint64_t a, std::uint64_t b) { return (a & b) == a; }

ExplicitFamily oracle_quotient(const ExplicitFamily& f, const ExplicitFamily& g) {
  if (g.set_count() == 0) throw std::invalid_argument("oracle quotient: empty divisor");
  check_enumerable(f, "quotient");
  std::vector<std::uint64_t> out;
  for (std::uint64_t s = 0;; ++s) {
    bool ok = true;
    for (std::uint64_t b : g.masks())
      if ((s & b) != 0 || !f.contains(s | b)) {
        ok = false;
        break;
      }
    if (ok) out.push_back(s);
    if (s == f.full_mask()) break;
  }
  return with_masks(f, std::move(out));
}

ExplicitFamily oracle_hitting(const ExplicitFamily& f) {
  check_enumerable(f, "hitting");
  std::vector<std::uint64_t> hits;
  for (std::uint64_t s = 0;; ++s) {
    bool ok = true;
    for (std::uint64_t b : f.masks())
      if ((s & b) == 0) {
        ok = false;
        break;
      }
    if (ok) hits.push_back(s);
    if (s == f.full_mask()) break;
  }
  // Keep only the inclusion-minimal hitters.
  std::vector<std::uint64_t> out;
  for (std::uint64_t a : hits) {
    bool minimal = true;
    for (std::uint64_t b : hits)
      if (b != a && subset(b, a)) {
        minimal = false;
        break;
      }
    if (minimal) out.push_back(a);
  }
  return with_masks(f, std::move(out));
}

ExplicitFamily oracle_closure(const ExplicitFamily& f) {
  if (f.set_count() <= 15) {
    // Every member of the closure is the intersection of a nonempty subfamily.
    std::vector<std::uint64_t> out;
    const auto& ms = f.masks();
    for (std::uint64_t pick = 1; pick < (1ull << ms.size()); ++pick) {
      std::uint64_t acc = ~0ull;
      for (std::size_t i = 0; i < ms.size(); ++i)
        if (pick & (1ull << i)) acc &= ms[i];
      out.push_back(acc);
    }
    return with_masks(f, std::move(out));
  }
  // Larger seeds: grow by pairwise intersection until stable.
  std::vector<std::uint64_t> cur(f.masks());
  std::sort(cur.begin(), cur.end());
  for (;;) {
    std::vector<std::uint64_t> next(cur);
    for (std::uint64_t a : cur)
      for (std::uint64_t b : cur) next.push_back(a & b);
    std::sort(next.begin(), next.end());
    next.erase(std::unique(next.begin(), next.end()), next.end());
    if (next == cur) break;
    cur = std::move(next);
  }
  return with_masks(f, std::move(cur));
}

ExplicitFamily oracle_condition(const ExplicitFamily& f,
                                std::span<const std::string> required,
                                std::span<const std::string> excluded) {
  std::uint64_t req = 0, exc = 0;
  for (const auto& name : required) req |= 1ull << f.position(name);
  for (const auto& name : excluded) exc |= 1ull << f.position(name);
  if (req & exc) throw std::invalid_argument("oracle condition: element required and excluded");
  std::vector<std::uint64_t> out;
  for (std::uint64_t a : f.masks())
    if (subset(req, a) && (a & exc) == 0) out.push_back(a & ~req);
  return with_masks(f, std::move(out));
}

}  // namespace

ExplicitFamily oracle_apply(OpKind op, const ExplicitFamily& f, const ExplicitFamily* g,
                            std::span<const std::string> required,
                            std::span<const std::string> excluded) {
  if (g != nullptr && g->universe() != f.universe())
    throw std::invalid_argument("oracle: operands over different universes");
  switch (op) {
    case OpKind::set_union: {
      std::vector<std::uint64_t> out(f.masks());
      const auto& gm = need_g(op, g).masks();
      out.insert(out.end(), gm.begin(), gm.end());
      return with_masks(f, std::move(out));
    }
    case OpKind::set_intersection:
      return filter(f, [&](std::uint64_t a) { return need_g(op, g).contains(a); });
    case OpKind::set_difference:
      return filter(f, [&](std::uint64_t a) { return !need_g(op, g).contains(a); });
    case OpKind::symmetric_difference: {
      const ExplicitFamily& gg = need_g(op, g);
      std::vector<std::uint64_t> out;
      for (std::uint64_t a : f.masks())
        if (!gg.contains(a)) out.push_back(a);
      for (std::uint64_t b : gg.masks())
        if (!f.contains(b)) out.push_back(b);
      return with_masks(f, std::move(out));
    }
    case OpKind::join:
      return pairwise(f, need_g(op, g), [](auto, auto) { return true; },
                      [](std::uint64_t a, std::uint64_t b) { return a | b; });
    case OpKind::disjoint_join:
      return pairwise(f, need_g(op, g),
                      [](std::uint64_t a, std::uint64_t b) { return (a & b) == 0; },
                      [](std::uint64_t a, std::uint64_t b) { return a | b; });
    case OpKind::joint_join:
      return pairwise(f, need_g(op, g),
                      [](std::uint64_t a, std::uint64_t b) { return (a & b) != 0; },
                      [](std::uint64_t a, std::uint64_t b) { return a | b; });
    case OpKind::meet:
      return pairwise(f, need_g(op, g), [](auto, auto) { return true; },
                      [](std::uint64_t a, std::uint64_t b) { return a & b; });
    case OpKind::delta:
      return pairwise(f, need_g(op, g), [](auto, auto) { return true; },
                      [](std::uint64_t a, std::uint64_t b) { return a ^ b; });
    case OpKind::quotient:
      return oracle_quotient(f, need_g(op, g));
    case OpKind::remainder: {
      const ExplicitFamily& gg = need_g(op, g);
      ExplicitFamily q = oracle_quotient(f, gg);
      ExplicitFamily prod = oracle_apply(OpKind::join, gg, &q);
      return oracle_apply(OpKind::set_difference, f, &prod);
    }
    case OpKind::restrict:
      return filter(f, [&](std::uint64_t a) {
        for (std::uint64_t b : need_g(op, g).masks())
          if (subset(b, a)) return true;
        return false;
      });
    case OpKind::permit:
      return filter(f, [&](std::uint64_t a) {
        for (std::uint64_t b : need_g(op, g).masks())
          if (subset(a, b)) return true;
        return false;
      });
    case OpKind::nonsuperset:
      return filter(f, [&](std::uint64_t a) {
        for (std::uint64_t b : need_g(op, g).masks())
          if (subset(b, a)) return false;
        return true;
      });
    case OpKind::nonsubset:
      return filter(f, [&](std::uint64_t a) {
        for (std::uint64_t b : need_g(op, g).masks())
          if (subset(a, b)) return false;
        return true;
      });
    case OpKind::maximal:
      return filter(f, [&](std::uint64_t a) {
        for (std::uint64_t b : f.masks())
          if (b != a && subset(a, b)) return false;
        return true;
      });
    case OpKind::minimal:
      return filter(f, [&](std::uint64_t a) {
        for (std::uint64_t b : f.masks())
          if (b != a && subset(b, a)) return false;
        return true;
      });
    case OpKind::minimal_hitting:
      return oracle_hitting(f);
    case OpKind::closure:
      return oracle_closure(f);
    case OpKind::condition:
      return oracle_condition(f, required, excluded);
  }
  throw std::invalid_argument("oracle: unknown op kind");
}

OrderSearchResult min_size_over_orders(const ExplicitFamily& fam, Semantics sem,
                                       bool exhaustive, std::size_t samples,
                                       std::uint64_t seed) {
  OrderSearchResult res;
  auto measure = [&](const std::vector<std::string>& names) {
    DiagramManager m(sem, VariableOrder(names));
    std::size_t size = node_count(from_explicit(m, fam));
    res.sizes.push_back(size);
    if (res.best_order.empty() || size < res.best_size) {
      res.best_size = size;
      res.best_order = names;
    }
    res.worst_size = std::max(res.worst_size, size);
  };

  if (exhaustive) {
    if (fam.universe_size() > 8)
      throw std::invalid_argument("min_size_over_orders: exhaustive search capped at 8 elements");
    std::vector<std::string> names(fam.universe());
    std::sort(names.begin(), names.end());
    do {
      measure(names);
    } while (std::next_permutation(names.begin(), names.end()));
  } else {
    for (std::size_t i = 0; i < samples; ++i) {
      std::vector<std::string> names(fam.universe());
      SplitMix64 rng(seed + i);
      deterministic_shuffle(names, rng);
      measure(names);
    }
  }

  // Rebuild the winner once more; a mismatch would mean the search above
  // recorded a size for an order it did not actually build.
  DiagramManager check(sem, VariableOrder(res.best_order));
  if (node_count(from_explicit(check, fam)) != res.best_size)
    throw std::logic_error("min_size_over_orders: best order failed its re-check");
  return res;
}

}  // namespace famdd
