#include <doctest.h>

#include <array>
#include <cmath>
#include <limits>
#include <random>
#include <string>
#include <vector>

#include <json.hpp>

#include "aqsspm/dataset.hpp"
#include "aqsspm/error.hpp"
#include "aqsspm/logistic_regression.hpp"
#include "aqsspm/model_io.hpp"
#include "aqsspm/naive_bayes.hpp"
#include "aqsspm/predictor.hpp"

using namespace aqsspm;

namespace {

template <class Fn>
std::string expect_error(ErrorCode code, Fn&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    CHECK(code_name(e.code()) == code_name(code));
    return e.what();
  }
  FAIL("expected " << code_name(code));
  return {};
}

SurveyDataset one_cause_split() {
  std::vector<SurveyRow> rows;
  for (int k = 0; k < 3; ++k) rows.push_back({{9}, Outcome::Success});
  for (int k = 0; k < 3; ++k) rows.push_back({{1}, Outcome::Failure});
  return SurveyDataset(CauseCatalog::generic(1), rows);
}

// Random 3-cause dataset with every scale in {1,2,3}.
SurveyDataset small_grid_dataset(std::uint64_t seed, std::size_t rows) {
  std::mt19937_64 rng(seed);
  std::vector<SurveyRow> data;
  for (std::size_t r = 0; r < rows; ++r) {
    SurveyRow row;
    for (int i = 0; i < 3; ++i) row.scales.push_back(1 + static_cast<int>(rng() % 3));
    // outcome leans on the first cause so the classes differ
    row.outcome = (rng() % 4 < static_cast<unsigned>(row.scales[0])) ? Outcome::Success
                                                                     : Outcome::Failure;
    data.push_back(row);
  }
  return SurveyDataset(CauseCatalog::generic(3), data);
}

// Bayes' rule written out directly from counts, with plain products.
double brute_force_bayes(const SurveyDataset& d, double alpha, const std::vector<int>& x) {
  std::array<double, 2> class_count{};
  for (const auto& row : d.rows()) class_count[static_cast<int>(row.outcome)] += 1.0;
  std::array<double, 2> joint{};
  for (int t = 0; t < 2; ++t) {
    double p = class_count[t] / static_cast<double>(d.size());
    for (std::size_t i = 0; i < x.size(); ++i) {
      double match = 0.0;
      for (const auto& row : d.rows()) {
        if (static_cast<int>(row.outcome) == t && row.scales[i] == x[i]) match += 1.0;
      }
      p *= (match + alpha) / (class_count[t] + 9.0 * alpha);
    }
    joint[t] = p;
  }
  return joint[1] / (joint[0] + joint[1]);
}

// Standardization and mean log-likelihood, computed here from scratch.
struct OracleLr {
  std::vector<std::vector<double>> x;
  std::vector<double> y;

  explicit OracleLr(const SurveyDataset& d) {
    const std::size_t n = d.cause_count();
    std::vector<double> mean(n, 0.0);
    std::vector<double> sd(n, 0.0);
    for (const auto& row : d.rows())
      for (std::size_t i = 0; i < n; ++i) mean[i] += row.scales[i];
    for (auto& m : mean) m /= static_cast<double>(d.size());
    for (const auto& row : d.rows())
      for (std::size_t i = 0; i < n; ++i) sd[i] += (row.scales[i] - mean[i]) * (row.scales[i] - mean[i]);
    for (auto& s : sd) {
      s = std::sqrt(s / static_cast<double>(d.size()));
      if (s == 0.0) s = 1.0;
    }
    for (const auto& row : d.rows()) {
      std::vector<double> z(n);
      for (std::size_t i = 0; i < n; ++i) z[i] = (row.scales[i] - mean[i]) / sd[i];
      x.push_back(z);
      y.push_back(row.outcome == Outcome::Success ? 1.0 : 0.0);
    }
  }

  double log_likelihood(const std::vector<double>& params) const {
    long double total = 0.0L;
    for (std::size_t r = 0; r < x.size(); ++r) {
      long double z = params[0];
      for (std::size_t i = 0; i < x[r].size(); ++i) z += params[i + 1] * x[r][i];
      const long double p = 1.0L / (1.0L + std::exp(-z));
      total += y[r] * std::log(p) + (1.0L - y[r]) * std::log(1.0L - p);
    }
    return static_cast<double>(total / static_cast<long double>(x.size()));
  }
};

}  // namespace

TEST_CASE("nbc: balanced classes give an even prior") {
  const SurveyDataset d(CauseCatalog::generic(2), {{{1, 2}, Outcome::Success},
                                                   {{3, 4}, Outcome::Success},
                                                   {{5, 6}, Outcome::Failure},
                                                   {{7, 8}, Outcome::Failure}});
  const auto m = train_nbc(d);
  CHECK(m.prior_success() == 0.5);
  CHECK(m.prior_failure() == 0.5);
}

TEST_CASE("nbc: hand-counted Laplace estimates") {
  const auto m = train_nbc(one_cause_split(), 1.0);
  CHECK(m.conditional(0, Outcome::Success, 9) == doctest::Approx(4.0 / 12.0).epsilon(1e-15));
  CHECK(m.conditional(0, Outcome::Success, 1) == doctest::Approx(1.0 / 12.0).epsilon(1e-15));
  CHECK(m.predict(std::vector<int>{9}) == doctest::Approx(0.8).epsilon(1e-12));

  const auto raw = train_nbc(one_cause_split(), 0.0);
  CHECK(raw.conditional(0, Outcome::Success, 9) == 1.0);
  CHECK(raw.conditional(0, Outcome::Failure, 9) == 0.0);
  CHECK(raw.predict(std::vector<int>{9}) == 1.0);
  CHECK(raw.predict(std::vector<int>{1}) == 0.0);
  // unseen under both classes: no evidence either way
  CHECK(raw.predict(std::vector<int>{5}) == 0.5);
}

TEST_CASE("nbc: uniform tables predict the prior") {
  NbcCauseTable uniform;
  for (auto& cls : uniform) cls.fill(1.0 / 9.0);
  const TrainedNbc m(CauseCatalog::generic(3), 0.5, {uniform, uniform, uniform}, 1.0);
  std::mt19937_64 rng(1);
  for (int k = 0; k < 100; ++k) {
    const std::vector<int> x{1 + int(rng() % 9), 1 + int(rng() % 9), 1 + int(rng() % 9)};
    CHECK(m.predict(x) == doctest::Approx(0.5).epsilon(1e-15));
  }
}

TEST_CASE("nbc: agrees with brute-force Bayes on the 3x3 grid") {
  for (std::uint64_t seed : {1u, 2u, 3u}) {
    const auto d = small_grid_dataset(seed, 40);
    for (double alpha : {1.0, 0.5, 2.0}) {
      const auto m = train_nbc(d, alpha);
      for (int a = 1; a <= 3; ++a)
        for (int b = 1; b <= 3; ++b)
          for (int c = 1; c <= 3; ++c) {
            const std::vector<int> x{a, b, c};
            CHECK(std::abs(m.predict(x) - brute_force_bayes(d, alpha, x)) <= 1e-10);
          }
    }
  }
}

TEST_CASE("nbc: tables normalize and posteriors sum to one") {
  const auto d = generate_synthetic(SyntheticDataSpec::planted(CauseCatalog::default_catalog(), 300), 4);
  const auto m = train_nbc(d);
  CHECK(m.prior_success() + m.prior_failure() == doctest::Approx(1.0).epsilon(1e-15));
  for (const auto& table : m.cpt()) {
    for (const auto& cls : table) {
      double sum = 0.0;
      for (double p : cls) {
        CHECK(p > 0.0);
        sum += p;
      }
      CHECK(std::abs(sum - 1.0) <= 1e-12);
    }
  }
  std::mt19937_64 rng(8);
  for (int k = 0; k < 500; ++k) {
    std::vector<int> x(19);
    for (auto& v : x) v = 1 + static_cast<int>(rng() % 9);
    const auto [fail, succ] = m.posterior(x);
    CHECK(std::abs(fail + succ - 1.0) <= 1e-12);
    CHECK(succ >= 0.0);
    CHECK(succ <= 1.0);
    CHECK(std::abs(m.predict(x) + m.predict_failure(x) - 1.0) <= 1e-12);
  }
}

TEST_CASE("nbc: preconditions") {
  const SurveyDataset single(CauseCatalog::generic(1), {{{3}, Outcome::Failure}, {{4}, Outcome::Failure}});
  const auto msg = expect_error(ErrorCode::SingleClass, [&] { (void)train_nbc(single); });
  CHECK(msg.find("single-class dataset") != std::string::npos);
  expect_error(ErrorCode::InvalidArgument, [&] { (void)train_nbc(one_cause_split(), -1.0); });
  const auto m = train_nbc(one_cause_split());
  expect_error(ErrorCode::Range, [&] { (void)m.predict(std::vector<int>{10}); });
  expect_error(ErrorCode::LengthMismatch, [&] { (void)m.predict(std::vector<int>{1, 2}); });
}

TEST_CASE("lr: fixed coefficients") {
  const auto cat = CauseCatalog::generic(2);
  const FeatureScaling unit{{5.0, 5.0}, {1.0, 1.0}};
  const TrainedLr zero(cat, 0.0, {0.0, 0.0}, unit, {}, {});
  const TrainedLr saturated(cat, 20.0, {0.0, 0.0}, unit, {}, {});
  for (int a = 1; a <= 9; ++a) {
    for (int b = 1; b <= 9; ++b) {
      const std::vector<int> x{a, b};
      CHECK(zero.predict(x) == 0.5);
      CHECK(saturated.predict(x) > 0.999999);
    }
  }
  const TrainedLr m(cat, 0.3, {0.7, -1.1}, FeatureScaling{{4.0, 6.0}, {2.0, 0.5}}, {}, {});
  const std::vector<int> x{7, 3};
  const double z = 0.3 + 0.7 * (7 - 4.0) / 2.0 - 1.1 * (3 - 6.0) / 0.5;
  CHECK(m.linear_score(x) == doctest::Approx(z).epsilon(1e-14));
  CHECK(m.predict(x) == doctest::Approx(1.0 / (1.0 + std::exp(-z))).epsilon(1e-14));
}

TEST_CASE("logistic function symmetry") {
  for (double x : {-800.0, -30.0, -2.5, -1e-9, 0.0, 0.3, 4.0, 37.0, 800.0}) {
    CHECK(logistic(x) + logistic(-x) == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(logistic(x) >= 0.0);
    CHECK(logistic(x) <= 1.0);
  }
}

TEST_CASE("predict_failure is the complement") {
  CHECK(ConstantPredictor(0.8, 2).predict_failure(std::vector<int>{1, 1}) == doctest::Approx(0.2));
  CHECK(ConstantPredictor(0.5, 2).predict_failure(std::vector<int>{1, 1}) == 0.5);
  expect_error(ErrorCode::InvalidArgument, [] { ConstantPredictor(1.5, 2); });
}

TEST_CASE("lr: label-independent features give small coefficients") {
  SyntheticDataSpec spec{CauseCatalog::generic(4), 10'000, std::vector<double>(4, 0.0), 0.0, 0.0};
  const auto d = generate_synthetic(spec, 12);
  const auto m = train_lr(d);
  CHECK(m.diagnostics().converged);
  const double rate = static_cast<double>(d.count(Outcome::Success)) / static_cast<double>(d.size());
  CHECK(std::abs(m.beta0() - std::log(rate / (1.0 - rate))) < 0.01);
  for (double b : m.beta()) CHECK(std::abs(b) < 0.1);
}

TEST_CASE("lr: separable data never converges") {
  LrHyperparams h;
  h.max_epochs = 2000;
  const auto m = train_lr(one_cause_split(), h);
  CHECK_FALSE(m.diagnostics().converged);
  CHECK(m.diagnostics().epochs == 2000);
  CHECK(m.beta()[0] > 0.0);
}

TEST_CASE("lr: objective matches an independent log-likelihood and its derivatives") {
  const auto d = generate_synthetic(SyntheticDataSpec::planted(CauseCatalog::generic(5), 400), 21);
  const OracleLr oracle(d);
  const LrObjective objective(d, fit_scaling(d));
  std::mt19937_64 rng(5);
  std::normal_distribution<double> normal(0.0, 1.0);
  for (int point = 0; point < 5; ++point) {
    std::vector<double> params(6);
    for (auto& p : params) p = normal(rng);
    CHECK(objective.log_likelihood(params) == doctest::Approx(oracle.log_likelihood(params)).epsilon(1e-12));
    const auto grad = objective.gradient(params);
    for (std::size_t k = 0; k < params.size(); ++k) {
      const double h = 1e-5;
      auto up = params;
      auto down = params;
      up[k] += h;
      down[k] -= h;
      const double fd = (oracle.log_likelihood(up) - oracle.log_likelihood(down)) / (2.0 * h);
      CHECK(std::abs(grad[k] - fd) <= 1e-4 * std::max(std::abs(fd), 1e-3));
    }
  }
}

TEST_CASE("lr: trained coefficients meet the declared criterion") {
  const auto d = generate_synthetic(SyntheticDataSpec::planted(CauseCatalog::generic(5), 500), 2);
  const auto m = train_lr(d);
  REQUIRE(m.diagnostics().converged);
  const LrObjective objective(d, m.scaling());
  std::vector<double> params{m.beta0()};
  params.insert(params.end(), m.beta().begin(), m.beta().end());
  double worst = 0.0;
  for (double g : objective.gradient(params)) worst = std::max(worst, std::abs(g));
  CHECK(worst < m.hyperparams().tolerance);
  CHECK(m.diagnostics().max_abs_gradient == doctest::Approx(worst));
  for (double s : m.scaling().scale) CHECK(s > 0.0);
}

TEST_CASE("lr: positive coefficient means increasing probability") {
  const auto d = generate_synthetic(SyntheticDataSpec::planted(CauseCatalog::generic(5), 500), 2);
  const auto m = train_lr(d);
  std::mt19937_64 rng(3);
  for (int k = 0; k < 200; ++k) {
    std::vector<int> x(5);
    for (auto& v : x) v = 1 + static_cast<int>(rng() % 8);
    for (std::size_t i = 0; i < 5; ++i) {
      auto y = x;
      ++y[i];
      if (m.beta()[i] > 0) CHECK(m.predict(y) > m.predict(x));
      if (m.beta()[i] < 0) CHECK(m.predict(y) < m.predict(x));
    }
  }
}

TEST_CASE("lr: preconditions") {
  LrHyperparams h;
  h.learning_rate = 0.0;
  expect_error(ErrorCode::InvalidArgument, [&] { h.validate(); });
  h = {};
  h.max_epochs = 0;
  expect_error(ErrorCode::InvalidArgument, [&] { h.validate(); });
  h = {};
  h.tolerance = -1.0;
  expect_error(ErrorCode::InvalidArgument, [&] { h.validate(); });
  const SurveyDataset single(CauseCatalog::generic(1), {{{3}, Outcome::Success}, {{4}, Outcome::Success}});
  expect_error(ErrorCode::SingleClass, [&] { (void)train_lr(single); });
  h = {};
  h.learning_rate = std::numeric_limits<double>::max();
  expect_error(ErrorCode::NonFinite, [&] {
    (void)train_lr(generate_synthetic(SyntheticDataSpec::planted(CauseCatalog::generic(3), 200), 1), h);
  });
}

TEST_CASE("both predictors stay within [0,1]") {
  const auto d = generate_synthetic(SyntheticDataSpec::planted(CauseCatalog::default_catalog(), 500), 1);
  const auto nbc = train_nbc(d);
  const auto lr = train_lr(d);
  std::mt19937_64 rng(99);
  for (int k = 0; k < 2000; ++k) {
    std::vector<int> x(19);
    for (auto& v : x) v = 1 + static_cast<int>(rng() % 9);
    for (const SuccessPredictor* p : {static_cast<const SuccessPredictor*>(&nbc),
                                      static_cast<const SuccessPredictor*>(&lr)}) {
      const double v = p->predict(x);
      CHECK(v >= 0.0);
      CHECK(v <= 1.0);
    }
  }
}

TEST_CASE("model files round-trip exactly") {
  const auto d = generate_synthetic(SyntheticDataSpec::planted(CauseCatalog::default_catalog(), 300), 6);
  const TrainedModel nbc = train_nbc(d, 0.0);
  const TrainedModel lr = train_lr(d);
  for (const auto* model : {&nbc, &lr}) {
    const auto text = serialize_model(*model);
    const auto back = parse_model(text);
    CHECK(model_kind(back) == model_kind(*model));
    CHECK(model_catalog(back) == model_catalog(*model));
    CHECK(serialize_model(back) == text);
    std::mt19937_64 rng(2);
    for (int k = 0; k < 100; ++k) {
      std::vector<int> x(19);
      for (auto& v : x) v = 1 + static_cast<int>(rng() % 9);
      CHECK(as_predictor(back).predict(x) == as_predictor(*model).predict(x));
    }
  }
  const auto doc = nlohmann::json::parse(serialize_model(nbc));
  CHECK(doc.at("alpha").get<double>() == 0.0);
  CHECK(doc.at("format_version").get<int>() == kModelFormatVersion);
}

TEST_CASE("malformed model files") {
  expect_error(ErrorCode::Parse, [] { (void)parse_model("{not json"); });
  expect_error(ErrorCode::Parse, [] { (void)parse_model(R"({"format_version": 99, "kind": "nbc"})"); });
  expect_error(ErrorCode::Parse, [] { (void)parse_model(R"({"format_version": 1, "kind": "tree"})"); });
}
