#include "qcvx/corpus.hpp"

#include <algorithm>
#include <random>

namespace qcvx::corpus {

namespace {

Function1D pl(std::initializer_list<std::pair<Rational, Rational>> points) {
  std::vector<Knot> knots;
  for (const auto& [x, v] : points) knots.push_back({x, v});
  return Function1D::piecewise_linear(std::move(knots));
}

}  // namespace

Function1D tent() { return pl({{0, 0}, {Rational(1, 2), 1}, {1, 0}}); }
Function1D vee() { return pl({{0, 1}, {Rational(1, 2), 0}, {1, 1}}); }
Function1D ramp_plateau() { return pl({{0, 0}, {Rational(1, 2), Rational(1, 2)}, {1, Rational(1, 2)}}); }
Function1D monotone() { return pl({{0, 0}, {1, 1}}); }
Function1D monotone_concave() { return pl({{0, 0}, {Rational(1, 2), Rational(3, 4)}, {1, 1}}); }
Function1D constant(const Rational& value) { return pl({{0, value}, {1, value}}); }

Function1D random_piecewise_linear(int max_knots, std::uint64_t seed) {
  if (max_knots < 2 || max_knots > 65) throw Error(Errc::parameter_range, "random PL needs 2 <= knots <= 65");
  // mt19937_64 output is fixed by the standard; the bounded draws below avoid
  // the implementation-defined distributions.
  std::mt19937_64 rng(seed);
  auto draw = [&](std::uint64_t bound) { return rng() % bound; };

  const auto count = static_cast<int>(2 + draw(static_cast<std::uint64_t>(max_knots - 1)));
  std::vector<int> slots(63);
  for (int i = 0; i < 63; ++i) slots[i] = i + 1;
  for (int i = 0; i < count - 2; ++i) {
    std::swap(slots[i], slots[i + static_cast<int>(draw(static_cast<std::uint64_t>(63 - i)))]);
  }
  std::vector<int> interior(slots.begin(), slots.begin() + (count - 2));
  std::sort(interior.begin(), interior.end());

  std::vector<Rational> positions{Rational(0)};
  for (int s : interior) positions.emplace_back(s, 64);
  positions.emplace_back(1);

  std::vector<Knot> knots;
  for (auto& p : positions) {
    p.canonicalize();
    const auto den = static_cast<long>(1 + draw(4));
    const auto num = static_cast<long>(draw(static_cast<std::uint64_t>(10 * den + 1)));
    Rational v(num, den);
    v.canonicalize();
    knots.push_back({p, v});
  }
  return Function1D::piecewise_linear(std::move(knots));
}

std::vector<std::string> names() {
  return {"tent", "vee", "ramp-plateau", "monotone", "monotone-concave", "constant", "cantor", "random-pl"};
}

}  // namespace qcvx::corpus
