#include "axial/constructions.hpp"

#include <map>

namespace axial {

AlgebraRef spin_factor(const SpinFactorSpec& spec) {
  Field f(spec.field);
  if (spec.B.rows != spec.v_dim || spec.B.cols != spec.v_dim)
    throw Error(Error::Cat::Precondition, "B has wrong size");
  for (const Scalar& s : spec.B.a)
    if (s.is_rational() != (spec.field.kind == FieldKind::Rationals))
      throw BadField("B entry does not belong to the chosen field");
  std::size_t n = spec.v_dim + 1;
  std::vector<Scalar> mult(n * n * n, f.zero());
  auto c = [&](std::size_t i, std::size_t j, std::size_t k) -> Scalar& {
    return mult[(i * n + j) * n + k];
  };
  c(0, 0, 0) = f.one();
  for (std::size_t i = 1; i < n; ++i) {
    c(0, i, i) = f.one();
    c(i, 0, i) = f.one();
    for (std::size_t j = 1; j < n; ++j) c(i, j, 0) = spec.B.at(i - 1, j - 1);
  }
  Mat gram(n, n);
  for (auto& g : gram.a) g = f.zero();
  Scalar two = f.from_long(2);
  gram.at(0, 0) = two;
  for (std::size_t i = 1; i < n; ++i)
    for (std::size_t j = 1; j < n; ++j)
      gram.at(i, j) = f.mul(two, spec.B.at(i - 1, j - 1));
  return new_algebra(spec.field, n, std::move(mult), std::move(gram));
}

NamedPair axis_pair_with_lambda(const FieldSpec& field, const Scalar& lambda) {
  Field f(field);
  if (lambda == f.one()) return lambda_one_fixture(field);
  SpinFactorSpec spec{field, 2, Mat(2, 2)};
  spec.B.at(0, 0) = f.one();
  spec.B.at(1, 1) = f.one();
  Scalar buv = f.sub(f.mul(f.from_long(2), lambda), f.one());
  spec.B.at(0, 1) = buv;
  spec.B.at(1, 0) = buv;
  AlgebraRef A = spin_factor(spec);
  Scalar h = f.half();
  Element a = A->element({h, h, f.zero()});
  Element b = A->element({h, f.zero(), h});
  return NamedPair{A, a, b};
}

NamedPair lambda_one_fixture(const FieldSpec& field) {
  Field f(field);
  SpinFactorSpec spec{field, 2, Mat(2, 2)};
  spec.B.at(0, 0) = f.one();
  spec.B.at(0, 1) = f.zero();
  spec.B.at(1, 0) = f.zero();
  spec.B.at(1, 1) = f.zero();
  AlgebraRef A = spin_factor(spec);
  Scalar h = f.half();
  Element a = A->element({h, h, f.zero()});
  Element b = A->element({h, h, h});
  return NamedPair{A, a, b};
}

AlgebraRef matsuo_algebra(const MatsuoSpec& spec) {
  Field f(spec.field);
  if (spec.eta != f.half())
    throw InvalidLineStructure("only eta = 1/2 is supported");
  std::size_t n = spec.points.size();
  if (n == 0) throw InvalidLineStructure("no points");

  std::map<std::pair<std::size_t, std::size_t>, std::size_t> third;
  for (const auto& line : spec.lines) {
    auto [x, y, z] = line;
    if (x >= n || y >= n || z >= n)
      throw InvalidLineStructure("line point out of range");
    if (x == y || y == z || x == z)
      throw InvalidLineStructure("line with repeated point");
    for (auto [p, q, r] : {std::array{x, y, z}, std::array{x, z, y},
                           std::array{y, z, x}}) {
      auto key = std::minmax(p, q);
      auto [it, fresh] = third.emplace(std::pair(key.first, key.second), r);
      if (!fresh && it->second != r)
        throw InvalidLineStructure("two points lie on more than one line");
    }
  }

  std::vector<Scalar> mult(n * n * n, f.zero());
  auto c = [&](std::size_t i, std::size_t j, std::size_t k) -> Scalar& {
    return mult[(i * n + j) * n + k];
  };
  Scalar quarter = f.from_fraction(1, 4);
  for (std::size_t i = 0; i < n; ++i) c(i, i, i) = f.one();
  for (const auto& [key, z] : third) {
    auto [x, y] = key;
    // x*y = 1/4 (x + y - z)
    c(x, y, x) = quarter;
    c(x, y, y) = quarter;
    c(x, y, z) = f.neg(quarter);
    c(y, x, x) = quarter;
    c(y, x, y) = quarter;
    c(y, x, z) = f.neg(quarter);
  }
  Mat gram(n, n);
  for (auto& g : gram.a) g = f.zero();
  for (std::size_t i = 0; i < n; ++i) gram.at(i, i) = f.one();
  for (const auto& entry : third) {
    gram.at(entry.first.first, entry.first.second) = quarter;
    gram.at(entry.first.second, entry.first.first) = quarter;
  }
  return new_algebra(spec.field, n, std::move(mult), std::move(gram));
}

MatsuoSpec matsuo_s3(const FieldSpec& field) {
  Field f(field);
  return MatsuoSpec{field, {"(12)", "(13)", "(23)"}, {{0, 1, 2}}, f.half()};
}

MatsuoSpec matsuo_s4(const FieldSpec& field) {
  Field f(field);
  // Transpositions (12),(13),(14),(23),(24),(34); lines = triples inside a
  // 3-subset of {1,2,3,4}.  Disjoint transpositions are non-collinear.
  return MatsuoSpec{field,
                    {"(12)", "(13)", "(14)", "(23)", "(24)", "(34)"},
                    {{0, 1, 3}, {0, 2, 4}, {1, 2, 5}, {3, 4, 5}},
                    f.half()};
}

AlgebraRef split_fixture(const FieldSpec& field) {
  Field f(field);
  std::vector<Scalar> mult(8, f.zero());
  mult[0] = f.one();                       // e0*e0 = e0
  mult[(1 * 2 + 1) * 2 + 1] = f.one();     // e1*e1 = e1
  Mat gram(2, 2);
  gram.at(0, 0) = f.one();
  gram.at(0, 1) = f.zero();
  gram.at(1, 0) = f.zero();
  gram.at(1, 1) = f.one();
  return new_algebra(field, 2, std::move(mult), std::move(gram));
}

Fixture fixture_by_name(const std::string& name, const FieldSpec& field) {
  if (name == "split") return Fixture{name, split_fixture(field), {}, {}};
  if (name == "lambda-one") {
    NamedPair p = lambda_one_fixture(field);
    return Fixture{name, p.algebra, p.a, p.b};
  }
  if (name == "matsuo:S3")
    return Fixture{name, matsuo_algebra(matsuo_s3(field)), {}, {}};
  if (name == "matsuo:S4")
    return Fixture{name, matsuo_algebra(matsuo_s4(field)), {}, {}};
  const std::string spin_prefix = "spin:";
  if (name.rfind(spin_prefix, 0) == 0) {
    Scalar lambda = scalar_parse(name.substr(spin_prefix.size()), field);
    NamedPair p = axis_pair_with_lambda(field, lambda);
    return Fixture{name, p.algebra, p.a, p.b};
  }
  throw Error(Error::Cat::Parse, "unknown fixture '" + name + "'");
}

}  // namespace axial
