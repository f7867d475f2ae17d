#include "mcg/quat.hpp"

#include <sstream>
#include <stdexcept>

namespace mcg {

Quat quat_zero() { return {0, 0, 0, 0}; }
Quat quat_one() { return {1, 0, 0, 0}; }

Quat qadd(const Quat& x, const Quat& y) {
  return {x.a + y.a, x.b + y.b, x.c + y.c, x.d + y.d};
}

Quat qmul(const Quat& x, const Quat& y) {
  // Hamilton product: i^2 = j^2 = k^2 = ijk = -1.
  return {x.a * y.a - x.b * y.b - x.c * y.c - x.d * y.d,
          x.a * y.b + x.b * y.a + x.c * y.d - x.d * y.c,
          x.a * y.c - x.b * y.d + x.c * y.a + x.d * y.b,
          x.a * y.d + x.b * y.c - x.c * y.b + x.d * y.a};
}

Rat qnorm2(const Quat& x) { return x.a * x.a + x.b * x.b + x.c * x.c + x.d * x.d; }

bool qis_zero(const Quat& x) { return x.a == 0 && x.b == 0 && x.c == 0 && x.d == 0; }

Quat qinv(const Quat& x) {
  Rat n = qnorm2(x);
  if (n == 0) throw std::invalid_argument("qinv: zero quaternion");
  return {x.a / n, -x.b / n, -x.c / n, -x.d / n};
}

std::string quat_to_string(const Quat& x) {
  std::ostringstream os;
  os << x.a << " + " << x.b << "i + " << x.c << "j + " << x.d << "k";
  return os.str();
}

Quat eval_word(const FreeWord& w, const Quat& s, const Quat& t) {
  Quat s_inv = qinv(s), t_inv = qinv(t);
  Quat acc = quat_one();
  for (const auto& l : w) {
    const Quat& q = (l.gen == FreeGen::S) ? (l.sign > 0 ? s : s_inv)
                                          : (l.sign > 0 ? t : t_inv);
    acc = qmul(acc, q);
  }
  return acc;
}

Quat random_quat(Rng& rng) {
  for (;;) {
    Quat q;
    Rat* comps[4] = {&q.a, &q.b, &q.c, &q.d};
    for (auto* c : comps) {
      Int num = rng.uniform(-5, 5);
      Int den = rng.uniform(1, 5);
      *c = Rat(num, den);
    }
    if (!qis_zero(q)) return q;
  }
}

CrossCheckResult cross_check(const DiffeoPair& lhs, const DiffeoPair& rhs,
                             long trials, std::uint64_t seed) {
  Rng rng(seed);
  for (long i = 0; i < trials; ++i) {
    Quat s = random_quat(rng);
    Quat t = random_quat(rng);
    Quat l1 = eval_word(lhs.w1, s, t), r1 = eval_word(rhs.w1, s, t);
    if (!(l1 == r1)) return {false, i + 1, CrossCheckWitness{s, t, 1, l1, r1}};
    Quat l2 = eval_word(lhs.w2, s, t), r2 = eval_word(rhs.w2, s, t);
    if (!(l2 == r2)) return {false, i + 1, CrossCheckWitness{s, t, 2, l2, r2}};
  }
  return {true, trials, std::nullopt};
}

}  // namespace mcg
