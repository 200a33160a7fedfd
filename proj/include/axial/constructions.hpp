#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "axial/algebra.hpp"

namespace axial {

struct InvalidLineStructure : Error {
  explicit InvalidLineStructure(const std::string& msg)
      : Error(Cat::Precondition, msg) {}
};

// Spin factor F1 + V: (alpha 1 + u)(beta 1 + v) = (alpha beta + B(u,v))1
// + alpha v + beta u, Gram scaled by 2 so that axes (1+u)/2 with B(u,u)=1
// have norm 1.
struct SpinFactorSpec {
  FieldSpec field;
  std::size_t v_dim = 0;
  Mat B;  // v_dim x v_dim, symmetric
};

// Matsuo algebra of a partial linear space at eta = 1/2: basis = points,
// x*x = x, x*y = 1/4(x+y-z) when {x,y,z} is a line, 0 otherwise;
// (x,x) = 1, (x,y) = 1/4 for collinear pairs, 0 otherwise.
struct MatsuoSpec {
  FieldSpec field;
  std::vector<std::string> points;
  std::vector<std::array<std::size_t, 3>> lines;
  Scalar eta;  // must equal 1/2 in the given field
};

AlgebraRef spin_factor(const SpinFactorSpec& spec);

// Realizes any prescribed lambda = (a,b) on a dim-3 spin factor with
// B(u,u) = B(v,v) = 1, B(u,v) = 2*lambda - 1, a = (1+u)/2, b = (1+v)/2.
// lambda = 1 would degenerate to a = b, so it maps to lambda_one_fixture.
struct NamedPair {
  AlgebraRef algebra;
  Element a, b;
};
NamedPair axis_pair_with_lambda(const FieldSpec& field, const Scalar& lambda);

// Degenerate (a,b) = 1 fixture: B(u,u)=1, B(v,v)=B(u,v)=0, a = (1+u)/2,
// b = (1+u+v)/2; b0 = 0 and bhalf = v/2 spans the form's radical.
NamedPair lambda_one_fixture(const FieldSpec& field);

AlgebraRef matsuo_algebra(const MatsuoSpec& spec);
MatsuoSpec matsuo_s3(const FieldSpec& field);
MatsuoSpec matsuo_s4(const FieldSpec& field);

// F + F with coordinatewise product and identity Gram; e0+e1 is an
// idempotent with (c,c)=2 that is not an axis.
AlgebraRef split_fixture(const FieldSpec& field);

// Built-in fixtures addressable from the CLI: "spin:<lambda>", "lambda-one",
// "matsuo:S3", "matsuo:S4", "split".  a/b are set for fixtures that define
// named axes.
struct Fixture {
  std::string name;
  AlgebraRef algebra;
  std::optional<Element> a, b;
};
Fixture fixture_by_name(const std::string& name, const FieldSpec& field);

}  // namespace axial
