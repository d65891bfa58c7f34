#include "tenjoin/counting.hpp"

#include <functional>
#include <stdexcept>

namespace tenjoin {

namespace {

void check_pair(const std::vector<int>& sizes, int i, int j) {
  const int k = static_cast<int>(sizes.size());
  if (i < 1 || j < i || j > k) throw std::invalid_argument("need 1 <= i <= j <= k");
  for (int s : sizes)
    if (s < 1) throw std::invalid_argument("class sizes must be positive");
}

// Sum over compositions of `total` across classes of the binomial products,
// where class t must contribute at least min_part[t] and draws from pool[t].
Integer composition_sum(const std::vector<int>& pool, const std::vector<int>& min_part, int total) {
  const int k = static_cast<int>(pool.size());
  Integer sum = 0;
  std::function<void(int, int, Integer)> rec = [&](int t, int remaining, Integer partial) {
    if (t == k) {
      if (remaining == 0) sum += partial;
      return;
    }
    for (int take = min_part[t]; take <= remaining; ++take) {
      Integer factor = binomial(pool[t], take);
      if (factor == 0 && take > 0) continue;
      rec(t + 1, remaining - take, partial * factor);
    }
  };
  rec(0, total, Integer(1));
  return sum;
}

struct MaskLayout {
  int total = 0;
  std::vector<unsigned> class_mask;
  std::vector<int> first;   // first position of each class
  std::vector<int> second;  // second position, or -1
};

MaskLayout layout(const std::vector<int>& sizes) {
  MaskLayout ml;
  for (int s : sizes) {
    ml.class_mask.push_back(((1u << s) - 1u) << ml.total);
    ml.first.push_back(ml.total);
    ml.second.push_back(s >= 2 ? ml.total + 1 : -1);
    ml.total += s;
  }
  if (ml.total > 20) throw std::invalid_argument("oracle supports at most 20 vertices in total");
  return ml;
}

}  // namespace

Integer n_cross(const std::vector<int>& sizes, int i, int j, int c) {
  check_pair(sizes, i, j);
  if (c < 2) return 0;
  const int k = static_cast<int>(sizes.size());
  std::vector<int> pool(sizes.begin(), sizes.end());
  std::vector<int> min_part(k, 1);
  if (i == j) {
    if (sizes[i - 1] < 2) throw std::invalid_argument("class must have two vertices when i == j");
    pool[i - 1] -= 2;
    min_part[i - 1] = 0;
  } else {
    pool[i - 1] -= 1;
    pool[j - 1] -= 1;
    min_part[i - 1] = 0;
    min_part[j - 1] = 0;
  }
  return composition_sum(pool, min_part, c - 2);
}

Integer n_cross_oracle(const std::vector<int>& sizes, int i, int j, int c) {
  check_pair(sizes, i, j);
  if (c < 2) return 0;
  MaskLayout ml = layout(sizes);
  int p = ml.first[i - 1];
  int q = (i == j) ? ml.second[i - 1] : ml.first[j - 1];
  if (q < 0) throw std::invalid_argument("class must have two vertices when i == j");
  unsigned pq = (1u << p) | (1u << q);
  unsigned rest = ((ml.total == 32 ? 0u : (1u << ml.total)) - 1u) & ~pq;
  long long count = 0;
  unsigned sub = rest;
  while (true) {
    unsigned mask = sub | pq;
    if (__builtin_popcount(mask) == c) {
      bool spans = true;
      for (unsigned cm : ml.class_mask)
        if ((mask & cm) == 0) {
          spans = false;
          break;
        }
      if (spans) ++count;
    }
    if (sub == 0) break;
    sub = (sub - 1) & rest;
  }
  return Integer(static_cast<long>(count));
}

Integer q_cross(const std::vector<int>& sizes, int i, int j, int c) {
  check_pair(sizes, i, j);
  if (i == j || c < 2) return 0;
  const int k = static_cast<int>(sizes.size());
  // elementary symmetric polynomial e_{c-2} of the other class sizes
  std::vector<Integer> e(static_cast<std::size_t>(c - 1), Integer(0));
  e[0] = 1;
  for (int t = 1; t <= k; ++t) {
    if (t == i || t == j) continue;
    for (int d = static_cast<int>(e.size()) - 1; d >= 1; --d) e[d] += e[d - 1] * sizes[t - 1];
  }
  return e[c - 2];
}

Integer q_cross_oracle(const std::vector<int>& sizes, int i, int j, int c) {
  check_pair(sizes, i, j);
  if (i == j || c < 2) return 0;
  MaskLayout ml = layout(sizes);
  int p = ml.first[i - 1];
  int q = ml.first[j - 1];
  unsigned pq = (1u << p) | (1u << q);
  unsigned rest = ((1u << ml.total) - 1u) & ~pq;
  long long count = 0;
  unsigned sub = rest;
  while (true) {
    unsigned mask = sub | pq;
    if (__builtin_popcount(mask) == c) {
      bool simple = true;
      for (unsigned cm : ml.class_mask)
        if (__builtin_popcount(mask & cm) > 1) {
          simple = false;
          break;
        }
      if (simple) ++count;
    }
    if (sub == 0) break;
    sub = (sub - 1) & rest;
  }
  return Integer(static_cast<long>(count));
}

Integer p1(int n, int l, int c) {
  if (n < 2 || l < 2) throw std::invalid_argument("p1 needs n >= 2 and l >= 2");
  if (c - 2 <= 0) return 0;
  // all compositions minus the single term with every t_j = 0 for j >= 2
  std::vector<int> pool(l, n);
  pool[0] = n - 2;
  std::vector<int> min_part(l, 0);
  return composition_sum(pool, min_part, c - 2) - binomial(n - 2, c - 2);
}

Integer p2(int n, int l, int c) {
  if (n < 1 || l < 2) throw std::invalid_argument("p2 needs n >= 1 and l >= 2");
  if (c < 2) return 0;
  std::vector<int> pool(l, n);
  pool[0] = n - 1;
  pool[1] = n - 1;
  std::vector<int> min_part(l, 0);
  return composition_sum(pool, min_part, c - 2);
}

Integer p1_oracle(int n, int l, int c) {
  if (n < 2 || l < 2) throw std::invalid_argument("p1 needs n >= 2 and l >= 2");
  if (c < 2) return 0;
  std::vector<int> sizes(l, n);
  MaskLayout ml = layout(sizes);
  unsigned pq = (1u << ml.first[0]) | (1u << ml.second[0]);
  unsigned rest = ((1u << ml.total) - 1u) & ~pq;
  long long count = 0;
  unsigned sub = rest;
  while (true) {
    unsigned mask = sub | pq;
    if (__builtin_popcount(mask) == c && (mask & ~ml.class_mask[0]) != 0) ++count;
    if (sub == 0) break;
    sub = (sub - 1) & rest;
  }
  return Integer(static_cast<long>(count));
}

Integer p2_oracle(int n, int l, int c) {
  if (n < 1 || l < 2) throw std::invalid_argument("p2 needs n >= 1 and l >= 2");
  if (c < 2) return 0;
  std::vector<int> sizes(l, n);
  MaskLayout ml = layout(sizes);
  unsigned pq = (1u << ml.first[0]) | (1u << ml.first[1]);
  unsigned rest = ((1u << ml.total) - 1u) & ~pq;
  long long count = 0;
  unsigned sub = rest;
  while (true) {
    unsigned mask = sub | pq;
    if (__builtin_popcount(mask) == c) ++count;
    if (sub == 0) break;
    sub = (sub - 1) & rest;
  }
  return Integer(static_cast<long>(count));
}

std::pair<Rational, Rational> x1x2(int n, int r) {
  if (r < 1 || r > n) throw std::invalid_argument("aligned cardinality out of range");
  Rational x1 = make_rational(binomial(n - 1, r - 1), Integer(2 * r - 1));
  Rational x2 = (r == 1) ? Rational(0) : make_rational(binomial(n - 2, r - 2), Integer(2 * r - 1));
  return {x1, x2};
}

KCopyConstants k_copy_constants(int k, int l, int n, int r, const WeightTable& w) {
  if (l < 2 || l > k) throw std::invalid_argument("need 2 <= l <= k");
  if (r < 1 || r > n) throw std::invalid_argument("need 1 <= r <= n");
  KCopyConstants out;
  Rational sum1 = 0, sum2 = 0;
  for (int c = 2; c <= l * n; ++c) {
    Rational cm1(static_cast<long>(c) - 1);
    sum1 += w.at(c) * Rational(p1(n, l, c)) / cm1;
    sum2 += w.at(c) * Rational(p2(n, l, c)) / cm1;
  }
  out.p1_prime = Rational(binomial(k - 1, l - 1)) * sum1;
  out.p2_prime = Rational(binomial(k - 2, l - 2)) * sum2;
  Rational wlr = w.at(l * r) / Rational(static_cast<long>(l) * r - 1);
  out.p21 = wlr * Rational(binomial(k - 2, l - 2)) * Rational(binomial(n - 1, r - 1));
  out.p22 = (r == 1) ? Rational(0) : wlr * Rational(binomial(k - 2, l - 2)) * Rational(binomial(n - 2, r - 2));
  out.p12 = (r == 1) ? Rational(0) : wlr * Rational(binomial(k - 1, l - 1)) * Rational(binomial(n - 2, r - 2));
  return out;
}

}  // namespace tenjoin
