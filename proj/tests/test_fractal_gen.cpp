#include <cmath>
#include <random>

#include <gtest/gtest.h>

#include "tensorfractal/fractal_gen.hpp"

using namespace tensorfractal;

namespace {

// Second Sierpinski carpet step, written out by hand.
const std::vector<std::vector<std::int64_t>> kSierpinskiStep2{
    {1, 1, 1, 1, 1, 1, 1, 1, 1}, {1, 0, 1, 1, 0, 1, 1, 0, 1}, {1, 1, 1, 1, 1, 1, 1, 1, 1},
    {1, 1, 1, 0, 0, 0, 1, 1, 1}, {1, 0, 1, 0, 0, 0, 1, 0, 1}, {1, 1, 1, 0, 0, 0, 1, 1, 1},
    {1, 1, 1, 1, 1, 1, 1, 1, 1}, {1, 0, 1, 1, 0, 1, 1, 0, 1}, {1, 1, 1, 1, 1, 1, 1, 1, 1}};

const std::vector<std::string> kFixedCatalog{"cantor", "sierpinski", "menger", "cantor_dust", "vicsek3d"};

std::vector<FractalSpec> all_specs() {
  std::vector<FractalSpec> specs;
  for (const auto& name : kFixedCatalog) specs.push_back(catalog(name));
  for (std::size_t d = 2; d <= 5; ++d) specs.push_back(multisponge_spec(d));
  return specs;
}

}  // namespace

TEST(Catalog, DefiningTensors) {
  EXPECT_EQ(catalog("cantor").defining(), IntTensor::vector({1, 0, 1}));
  EXPECT_EQ(catalog("sierpinski").defining(), IntTensor::matrix({{1, 1, 1}, {1, 0, 1}, {1, 1, 1}}));

  const IntTensor dust = catalog("cantor_dust").defining();
  ASSERT_EQ(dust.shape(), (Shape{3, 3, 3}));
  EXPECT_EQ(count_nonzeros(dust), 8u);
  for (std::size_t i : {0, 2})
    for (std::size_t j : {0, 2})
      for (std::size_t l : {0, 2}) EXPECT_EQ(dust({i, j, l}), 1);

  const IntTensor vicsek = catalog("vicsek3d").defining();
  EXPECT_EQ(count_nonzeros(vicsek), 7u);
  EXPECT_EQ(vicsek({1, 1, 0}), 1);
  EXPECT_EQ(vicsek({0, 1, 1}), 1);
  EXPECT_EQ(vicsek({1, 1, 1}), 1);
  EXPECT_EQ(vicsek({0, 0, 1}), 0);
}

TEST(Catalog, MultispongeThreeIsMenger) {
  EXPECT_EQ(catalog("multisponge(3)").defining(), catalog("menger").defining());
  EXPECT_EQ(catalog("multisponge(2)").defining(), catalog("sierpinski").defining());
  EXPECT_EQ(catalog("multisponge(4)").order(), 4u);
}

TEST(Catalog, Errors) {
  EXPECT_THROW(catalog("koch"), UnknownName);
  EXPECT_THROW(catalog("multisponge(x)"), UnknownName);
  EXPECT_THROW(catalog("multisponge()"), UnknownName);
  EXPECT_THROW(catalog("multisponge(1)"), InvalidOrder);
}

TEST(FractalSpecValidation, RejectsBadDefiningTensors) {
  EXPECT_THROW(FractalSpec("ragged", IntTensor::matrix({{1, 0, 1}, {1, 1, 1}})), InvalidShape);
  EXPECT_THROW(FractalSpec("empty", IntTensor(Shape{3, 3})), DegenerateSpec);
  EXPECT_THROW(FractalSpec("two", IntTensor::vector({1, 2, 1})), NotBinary);
}

TEST(Iterate, SierpinskiStepTwoMatchesReference) {
  EXPECT_EQ(iterate(catalog("sierpinski"), 2), IntTensor::matrix(kSierpinskiStep2));
}

TEST(Iterate, ZeroStepsIsUnitTensor) {
  for (const auto& spec : all_specs()) {
    const IntTensor t = iterate(spec, 0);
    EXPECT_EQ(t.shape(), Shape::ones(spec.order()));
    EXPECT_EQ(t[0], 1);
  }
}

TEST(Iterate, MengerStepTwoHas400Ones) {
  const IntTensor t = iterate(catalog("menger"), 2);
  EXPECT_EQ(t.shape(), (Shape{9, 9, 9}));
  EXPECT_EQ(count_nonzeros(t), 400u);
}

TEST(Iterate, NonzerosAreMToTheK) {
  for (const auto& spec : all_specs()) {
    std::size_t expected = 1;
    for (std::size_t k = 0; k <= 3; ++k) {
      if (std::pow(static_cast<double>(spec.base()), static_cast<double>(spec.order() * k)) > 3e6) break;
      EXPECT_EQ(count_nonzeros(iterate(spec, k)), expected) << spec.name() << " k=" << k;
      expected *= spec.ones();
    }
  }
}

TEST(Iterate, BudgetExceeded) {
  EXPECT_THROW(iterate(catalog("menger"), 7), BudgetExceeded);
}

TEST(Iterate, MidlinesAreCantorSets) {
  for (std::size_t k = 1; k <= 4; ++k) {
    const IntTensor cantor = iterate(catalog("cantor"), k);
    const std::size_t mid = (static_cast<std::size_t>(std::pow(3, k)) + 1) / 2 - 1;
    const IntTensor carpet = iterate(catalog("sierpinski"), k);
    EXPECT_EQ(slice(carpet, {mid, std::nullopt}).data(), cantor.data());
    EXPECT_EQ(slice(carpet, {std::nullopt, mid}).data(), cantor.data());
  }
  // Every face of the sponge is a carpet; its midline is a Cantor set.
  for (std::size_t k = 1; k <= 3; ++k) {
    const IntTensor cantor = iterate(catalog("cantor"), k);
    const IntTensor carpet = iterate(catalog("sierpinski"), k);
    const IntTensor sponge = iterate(catalog("menger"), k);
    const std::size_t mid = (static_cast<std::size_t>(std::pow(3, k)) + 1) / 2 - 1;
    for (std::size_t axis = 0; axis < 3; ++axis) {
      SliceSpec face(3);
      face[axis] = 0;
      const IntTensor f = slice(sponge, face);
      EXPECT_EQ(f, carpet);
      EXPECT_EQ(slice(f, {mid, std::nullopt}).data(), cantor.data());
    }
  }
}

TEST(LazyEntry, CantorPosition19) {
  const FractalSpec cantor = catalog("cantor");
  EXPECT_EQ(lazy_entry(cantor, 3, from_one_based({19})), 1);
  EXPECT_EQ(lazy_entry(cantor, 3, from_one_based({14})), 0);
  EXPECT_EQ(lazy_entry(cantor, 3, from_one_based({27})), 1);
}

TEST(LazyEntry, ZeroStepsIsOne) {
  for (const auto& spec : all_specs()) EXPECT_EQ(lazy_entry(spec, 0, MultiIndex(spec.order(), 0)), 1);
}

TEST(LazyEntry, AgreesWithMaterializedEverywhere) {
  // All catalog iterates with at most 3^8 entries.
  for (const auto& spec : all_specs()) {
    for (std::size_t k = 0; spec.order() * k <= 8; ++k) {
      const IntTensor t = iterate(spec, k);
      for (std::size_t flat = 0; flat < t.size(); ++flat) {
        const MultiIndex idx = t.shape().unflatten(flat);
        ASSERT_EQ(lazy_entry(spec, k, idx), t[flat]) << spec.name() << " k=" << k << " at " << format_index(idx);
      }
    }
  }
}

TEST(LazyEntry, HandComputedDigits) {
  const FractalSpec menger = catalog("menger");
  // Base-3 digits of (13, 0, 0) are (1,1,1), (0,0,0), (0,0,0): the first
  // digit tuple (1,0,0) is an edge cell, so the entry is 1.
  EXPECT_EQ(lazy_entry(menger, 3, {13, 0, 0}), 1);
  // (4, 4, 0): digits (0,1,1) / (0,1,1) / (0,0,0) -> (1,1,0) is a face centre.
  EXPECT_EQ(lazy_entry(menger, 2, {4, 4, 0}), 0);
  EXPECT_EQ(lazy_entry(menger, 12, {0, 0, 0}), 1);
  EXPECT_EQ(lazy_entry(menger, 12, {531440, 531440, 531440}), 1);
}

TEST(LazyEntry, Errors) {
  const FractalSpec menger = catalog("menger");
  EXPECT_THROW(lazy_entry(menger, 2, {9, 0, 0}), IndexOutOfRange);
  EXPECT_THROW(lazy_entry(menger, 2, {0, 0}), IndexOutOfRange);
}

TEST(FractalDimension, ReferenceValues) {
  EXPECT_NEAR(fractal_dimension(catalog("cantor")), 0.6309, 5e-5);
  EXPECT_NEAR(fractal_dimension(catalog("sierpinski")), 1.8928, 5e-5);
  EXPECT_NEAR(fractal_dimension(catalog("menger")), 2.7268, 5e-5);
  EXPECT_NEAR(fractal_dimension(catalog("cantor_dust")), 1.8928, 5e-5);
  EXPECT_NEAR(fractal_dimension(catalog("vicsek3d")), 1.7712, 5e-5);
  EXPECT_DOUBLE_EQ(fractal_dimension(catalog("menger")), std::log(20.0) / std::log(3.0));
}

TEST(FractalDimension, MultispongeClosedForm) {
  for (std::size_t d = 2; d <= 8; ++d) {
    const double expected = (std::log(d + 2.0) + (d - 1.0) * std::log(2.0)) / std::log(3.0);
    EXPECT_NEAR(fractal_dimension(multisponge_spec(d)), expected, 1e-12);
  }
}

TEST(FractalDimension, InvariantUnderIteration) {
  for (const auto& spec : all_specs()) {
    const double m = static_cast<double>(spec.ones()), n = static_cast<double>(spec.base());
    for (int k = 1; k <= 10; ++k) {
      EXPECT_NEAR(-std::log(std::pow(m, k)) / std::log(std::pow(n, -k)), fractal_dimension(spec), 1e-12);
    }
  }
}

TEST(FractalDimension, BaseOneIsDegenerate) {
  EXPECT_THROW(fractal_dimension(FractalSpec("point", IntTensor::vector({1}))), DegenerateSpec);
}

TEST(VolumeSequence, MengerFirstStep) {
  const VolumeSequence v = volume_sequence(catalog("menger"), 1);
  ASSERT_EQ(v.values.size(), 2u);
  EXPECT_EQ(v.values[0], 1);
  EXPECT_EQ(v.values[1], Rational(20, 27));
}

TEST(VolumeSequence, FullTensorKeepsUnitVolume) {
  const VolumeSequence v = volume_sequence(FractalSpec("full", IntTensor(Shape{2, 2}, 1)), 5);
  for (const auto& x : v.values) EXPECT_EQ(x, 1);
  EXPECT_FALSE(v.strictly_decreasing());
}

TEST(VolumeSequence, MultispongeFourExact) {
  const VolumeSequence v = volume_sequence(multisponge_spec(4), 3);
  const Rational expected = Rational(16, 27) * Rational(16, 27) * Rational(16, 27);
  EXPECT_EQ(v.values[3], expected);
  EXPECT_EQ(v.values[3], Rational(4096, 19683));
  EXPECT_NEAR(v.values[3].convert_to<double>(), std::pow(48.0, 3) / std::pow(3.0, 12), 1e-15);
}

TEST(VolumeSequence, ConstantRatio) {
  for (const auto& spec : all_specs()) {
    const VolumeSequence v = volume_sequence(spec, 6);
    const Rational ratio(spec.ones(), static_cast<std::size_t>(std::pow(spec.base(), spec.order())));
    for (std::size_t j = 0; j + 1 < v.values.size(); ++j) EXPECT_EQ(v.values[j + 1] / v.values[j], ratio);
    EXPECT_TRUE(v.strictly_decreasing()) << spec.name();  // every catalog entry has m < n^d
  }
}
