#include "bael/simulate.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <limits>
#include <mutex>
#include <stdexcept>
#include <thread>

#include "bael/normal.hpp"

namespace bael {

namespace {

int unique_best_arm(const std::vector<double>& means,
                    const std::string& what) {
  if (means.size() < 2) {
    throw std::invalid_argument(what + ": need at least 2 arms");
  }
  int best = 0;
  for (int i = 1; i < static_cast<int>(means.size()); ++i) {
    if (means[i] > means[best]) best = i;
  }
  for (int i = 0; i < static_cast<int>(means.size()); ++i) {
    if (i != best && means[i] == means[best]) {
      throw std::invalid_argument(what + ": best arm must be unique");
    }
  }
  return best;
}

}  // namespace

OutcomeModel::OutcomeModel(Kind kind, std::vector<double> true_means,
                           std::string label)
    : kind_(kind), true_means_(std::move(true_means)), label_(std::move(label)) {
  for (double m : true_means_) {
    if (!std::isfinite(m)) {
      throw std::invalid_argument("OutcomeModel: true means must be finite");
    }
  }
  best_arm_ = unique_best_arm(true_means_, "OutcomeModel");
}

OutcomeModel OutcomeModel::gaussian(std::vector<double> means, double sigma) {
  if (!(sigma > 0.0) || !std::isfinite(sigma)) {
    throw std::invalid_argument("OutcomeModel: sigma must be positive");
  }
  const int k = static_cast<int>(means.size());
  OutcomeModel model(Kind::gauss, std::move(means),
                     "gaussian-k" + std::to_string(k));
  model.sigma_ = sigma;
  return model;
}

OutcomeModel OutcomeModel::zero_inflated_lognormal(std::vector<ZilnArm> arms) {
  std::vector<double> means;
  means.reserve(arms.size());
  for (const ZilnArm& a : arms) {
    if (!(a.p_zero >= 0.0 && a.p_zero < 1.0)) {
      throw std::invalid_argument("OutcomeModel: p_zero must lie in [0,1)");
    }
    if (!(a.sdlog > 0.0) || !std::isfinite(a.sdlog) ||
        !std::isfinite(a.meanlog)) {
      throw std::invalid_argument(
          "OutcomeModel: ziln needs finite meanlog and positive sdlog");
    }
    means.push_back((1.0 - a.p_zero) *
                    std::exp(a.meanlog + 0.5 * a.sdlog * a.sdlog));
  }
  const int k = static_cast<int>(arms.size());
  OutcomeModel model(Kind::ziln, std::move(means),
                     "ziln-k" + std::to_string(k));
  model.ziln_ = std::move(arms);
  return model;
}

OutcomeModel OutcomeModel::empirical(std::vector<std::vector<double>> samples) {
  std::vector<double> means;
  means.reserve(samples.size());
  for (const auto& arm : samples) {
    if (arm.empty()) {
      throw std::invalid_argument("OutcomeModel: empirical arm has no samples");
    }
    double sum = 0.0;
    for (double v : arm) {
      if (!std::isfinite(v)) {
        throw std::invalid_argument(
            "OutcomeModel: empirical samples must be finite");
      }
      sum += v;
    }
    means.push_back(sum / arm.size());
  }
  const int k = static_cast<int>(samples.size());
  OutcomeModel model(Kind::empirical, std::move(means),
                     "empirical-k" + std::to_string(k));
  model.samples_ = std::move(samples);
  return model;
}

double OutcomeModel::sample(int arm, RandomStream& stream) const {
  switch (kind_) {
    case Kind::gauss:
      return true_means_[arm] + sigma_ * stream.normal();
    case Kind::ziln: {
      const ZilnArm& a = ziln_[arm];
      if (stream.uniform() < a.p_zero) return 0.0;
      return std::exp(a.meanlog + a.sdlog * stream.normal());
    }
    case Kind::empirical: {
      const std::vector<double>& pool = samples_[arm];
      auto idx = static_cast<std::size_t>(stream.uniform() * pool.size());
      if (idx >= pool.size()) idx = pool.size() - 1;
      return pool[idx];
    }
  }
  throw std::logic_error("OutcomeModel: unknown kind");
}

TrialRecord run_trial(const DesignSpec& design, const OutcomeModel& model,
                      long long horizon, RandomStream& stream) {
  const int k = design.weights.num_arms();
  if (model.num_arms() != k) {
    throw std::invalid_argument("run_trial: design and model disagree on k");
  }
  if (horizon < k) {
    throw std::invalid_argument("run_trial: horizon must be at least k");
  }

  // checkpoint[n] = time at which the field shrinks from n to n-1 arms,
  // half-up rounded, monotone, with the final checkpoint pinned to T.
  std::vector<long long> checkpoint(k + 1, 0);
  double cum = 0.0;
  for (int n = k; n >= 2; --n) {
    cum += design.weights.batch_share(n);
    checkpoint[n] = static_cast<long long>(std::floor(cum * horizon + 0.5));
    if (checkpoint[n] > horizon) checkpoint[n] = horizon;
    if (n < k && checkpoint[n] < checkpoint[n + 1]) {
      checkpoint[n] = checkpoint[n + 1];
    }
  }
  checkpoint[2] = horizon;

  std::vector<long long> counts(k, 0);
  std::vector<double> sums(k, 0.0);
  std::vector<char> active(k, 1);
  int survivors = k;

  TrialRecord record;
  record.pull_counts.assign(k, 0);
  record.eliminations.reserve(k - 1);

  auto eliminate = [&](long long now) {
    int victim = -1;
    double worst = std::numeric_limits<double>::infinity();
    for (int i = 0; i < k; ++i) {
      if (!active[i]) continue;
      const double mean = counts[i] > 0 ? sums[i] / counts[i] : 0.0;
      if (mean < worst) {
        worst = mean;
        victim = i;
      }
    }
    record.eliminations.push_back(Elimination{survivors, victim, now, counts});
    active[victim] = 0;
    --survivors;
  };

  // Zero-weight leading batches eliminate before any sampling; empirical
  // means are all 0 then, so the lowest index goes first.
  while (survivors >= 2 && checkpoint[survivors] == 0) eliminate(0);

  for (long long t = 1; t <= horizon; ++t) {
    int pick = -1;
    long long fewest = std::numeric_limits<long long>::max();
    for (int i = 0; i < k; ++i) {
      if (active[i] && counts[i] < fewest) {
        fewest = counts[i];
        pick = i;
      }
    }
    sums[pick] += model.sample(pick, stream);
    ++counts[pick];
    while (survivors >= 2 && checkpoint[survivors] == t) eliminate(t);
  }

  for (int i = 0; i < k; ++i) {
    if (active[i]) record.chosen_arm = i;
  }
  record.pull_counts = std::move(counts);
  return record;
}

SimReport monte_carlo(const DesignSpec& design, const OutcomeModel& model,
                      long long horizon, long long replications,
                      std::uint64_t seed, int threads) {
  if (replications < 1) {
    throw std::invalid_argument("monte_carlo: need at least 1 replication");
  }
  if (replications > (1ll << 32)) {
    throw std::invalid_argument(
        "monte_carlo: replication count exceeds the stream layout");
  }
  const int k = design.weights.num_arms();
  if (model.num_arms() != k) {
    throw std::invalid_argument("monte_carlo: design and model disagree on k");
  }
  if (threads <= 0) {
    threads = static_cast<int>(std::thread::hardware_concurrency());
    if (threads <= 0) threads = 1;
  }

  // Replication-indexed streams plus integer accumulators make the merge
  // order irrelevant, so any thread count yields identical reports.
  std::vector<long long> chosen(k, 0);
  std::vector<long long> pulls(k, 0);
  std::mutex merge_mutex;
  std::atomic<long long> next_block{0};
  constexpr long long kBlock = 512;
  const long long block_count = (replications + kBlock - 1) / kBlock;

  auto worker = [&]() {
    std::vector<long long> local_chosen(k, 0);
    std::vector<long long> local_pulls(k, 0);
    for (;;) {
      const long long block = next_block.fetch_add(1);
      if (block >= block_count) break;
      const long long lo = block * kBlock;
      const long long hi = std::min(replications, lo + kBlock);
      for (long long rep = lo; rep < hi; ++rep) {
        RandomStream stream(seed, static_cast<std::uint64_t>(rep));
        const TrialRecord rec = run_trial(design, model, horizon, stream);
        ++local_chosen[rec.chosen_arm];
        for (int i = 0; i < k; ++i) local_pulls[i] += rec.pull_counts[i];
      }
    }
    std::scoped_lock lock(merge_mutex);
    for (int i = 0; i < k; ++i) {
      chosen[i] += local_chosen[i];
      pulls[i] += local_pulls[i];
    }
  };

  const int spawn = static_cast<int>(
      std::min<long long>(threads, std::max<long long>(block_count, 1)));
  std::vector<std::thread> crew;
  crew.reserve(spawn);
  for (int i = 0; i < spawn; ++i) crew.emplace_back(worker);
  for (std::thread& th : crew) th.join();

  const double reps = static_cast<double>(replications);
  SimReport report;
  report.design = design.name;
  report.model = model.label();
  report.horizon = horizon;
  report.replications = replications;
  report.seed = seed;
  report.error_rate = 1.0 - static_cast<double>(chosen[model.best_arm()]) / reps;
  report.error_se =
      std::sqrt(report.error_rate * (1.0 - report.error_rate) / reps);

  const double top = model.true_means()[model.best_arm()];
  double first_moment = 0.0;
  double second_moment = 0.0;
  for (int i = 0; i < k; ++i) {
    const double gap = top - model.true_means()[i];
    const double share = static_cast<double>(chosen[i]) / reps;
    first_moment += gap * share;
    second_moment += gap * gap * share;
  }
  report.regret = first_moment;
  if (replications > 1) {
    const double var = (second_moment - first_moment * first_moment) * reps /
                       (reps - 1.0);
    report.regret_se = std::sqrt(std::max(var, 0.0) / reps);
  }
  report.mean_pulls.resize(k);
  for (int i = 0; i < k; ++i) {
    report.mean_pulls[i] = static_cast<double>(pulls[i]) / reps;
  }
  return report;
}

double exact_crt_error_two_arms(double delta, double sigma,
                                long long horizon) {
  if (!(delta > 0.0) || !std::isfinite(delta)) {
    throw std::invalid_argument(
        "exact_crt_error_two_arms: delta must be positive");
  }
  if (!(sigma > 0.0) || !std::isfinite(sigma)) {
    throw std::invalid_argument(
        "exact_crt_error_two_arms: sigma must be positive");
  }
  if (horizon < 2 || horizon % 2 != 0) {
    throw std::invalid_argument(
        "exact_crt_error_two_arms: horizon must be even and at least 2");
  }
  return normal_cdf(-delta * std::sqrt(static_cast<double>(horizon)) /
                    (2.0 * sigma));
}

ExponentFit empirical_exponent(
    const std::vector<std::pair<long long, double>>& points) {
  const int n = static_cast<int>(points.size());
  if (n < 3) {
    throw std::invalid_argument("empirical_exponent: need at least 3 points");
  }
  for (const auto& [horizon, rate] : points) {
    if (!(rate > 0.0 && rate < 1.0)) {
      throw std::invalid_argument(
          "empirical_exponent: error rates must lie strictly in (0,1)");
    }
    if (horizon <= 0) {
      throw std::invalid_argument(
          "empirical_exponent: horizons must be positive");
    }
  }
  double mean_x = 0.0;
  double mean_y = 0.0;
  for (const auto& [horizon, rate] : points) {
    mean_x += static_cast<double>(horizon);
    mean_y += -std::log(rate);
  }
  mean_x /= n;
  mean_y /= n;
  double sxx = 0.0;
  double sxy = 0.0;
  for (const auto& [horizon, rate] : points) {
    const double dx = static_cast<double>(horizon) - mean_x;
    sxx += dx * dx;
    sxy += dx * (-std::log(rate) - mean_y);
  }
  if (sxx <= 0.0) {
    throw std::invalid_argument("empirical_exponent: horizons must differ");
  }
  const double slope = sxy / sxx;
  double rss = 0.0;
  for (const auto& [horizon, rate] : points) {
    const double fitted =
        mean_y + slope * (static_cast<double>(horizon) - mean_x);
    const double resid = -std::log(rate) - fitted;
    rss += resid * resid;
  }
  const double se = std::sqrt(rss / (n - 2) / sxx);
  return ExponentFit{slope, se};
}

}  // namespace bael
