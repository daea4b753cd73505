#include "avoid/policy.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "avoid/error.hpp"

namespace avoid {

namespace {

void require_probability(double p) {
  if (!(p >= 0.0 && p <= 1.0)) throw DomainError("Bernoulli parameter must lie in [0, 1]");
}

std::string format_double(double x) {
  std::ostringstream os;
  os.precision(12);
  os << x;
  return os.str();
}

}  // namespace

IndependentPolicy::IndependentPolicy(std::uint32_t k, double p) : k_(k), p_(p) {
  if (k < 1) throw DomainError("walker count k must be at least 1");
  require_probability(p);
}

std::string IndependentPolicy::name() const {
  return "independent(k=" + std::to_string(k_) + ",p=" + format_double(p_) + ")";
}

void IndependentPolicy::next_row(Rng& rng, std::span<std::uint8_t> row) {
  for (auto& x : row) x = rng.bernoulli(p_) ? 1 : 0;
}

RoundRobinPolicy::RoundRobinPolicy(std::uint32_t k) : k_(k) {
  if (k < 1) throw DomainError("walker count k must be at least 1");
}

std::string RoundRobinPolicy::name() const { return "round-robin(k=" + std::to_string(k_) + ")"; }

void RoundRobinPolicy::next_row(Rng&, std::span<std::uint8_t> row) {
  std::fill(row.begin(), row.end(), 0);
  row[turn_] = 1;
  turn_ = (turn_ + 1) % k_;
}

std::unique_ptr<CouplingPolicy> trivial_k1(double p) { return std::make_unique<IndependentPolicy>(1, p); }

GreedyAvoidingWalkers::GreedyAvoidingWalkers(std::uint32_t n, std::uint32_t k, bool looped)
    : n_(n), k_(k), looped_(looped) {
  if (k < 1) throw DomainError("walker count k must be at least 1");
  if (n < k + (looped ? 0 : 1)) {
    throw DomainError("n = " + std::to_string(n) + " leaves some walker without a legal move");
  }
}

std::string GreedyAvoidingWalkers::name() const {
  return "greedy-avoiding(n=" + std::to_string(n_) + ",k=" + std::to_string(k_) + ",looped=" +
         (looped_ ? "1" : "0") + ")";
}

std::span<const std::int32_t> GreedyAvoidingWalkers::current(Rng& rng) {
  if (pos_.empty()) {
    // Partial Fisher-Yates: the first k entries are a uniform injection.
    std::vector<std::int32_t> vertices(n_);
    std::iota(vertices.begin(), vertices.end(), 1);
    for (std::uint32_t i = 0; i < k_; ++i) {
      auto j = i + static_cast<std::uint32_t>(rng.uniform_below(n_ - i));
      std::swap(vertices[i], vertices[j]);
    }
    pos_.assign(vertices.begin(), vertices.begin() + k_);
  }
  return pos_;
}

void GreedyAvoidingWalkers::next_row(Rng& rng, std::span<std::int32_t> row) {
  current(rng);
  for (std::uint32_t i = 0; i < k_; ++i) {
    candidates_.clear();
    for (std::int32_t v = 1; v <= static_cast<std::int32_t>(n_); ++v) {
      bool free = looped_ || v != pos_[i];
      for (std::uint32_t j = 0; j < k_ && free; ++j) {
        if (j != i && pos_[j] == v) free = false;
      }
      if (free) candidates_.push_back(v);
    }
    pos_[i] = candidates_[rng.uniform_below(candidates_.size())];
  }
  std::copy(pos_.begin(), pos_.end(), row.begin());
}

StayingInWaves::StayingInWaves(std::unique_ptr<WalkerPolicy> inner) : inner_(std::move(inner)) {
  if (!inner_) throw DomainError("staying_in_waves needs an inner policy");
}

std::string StayingInWaves::name() const { return "staying-in-waves(" + inner_->name() + ")"; }

void StayingInWaves::reset() {
  inner_->reset();
  last_wave_ = false;
  waves_ = 0;
  rounds_ = 0;
}

void StayingInWaves::next_row(Rng& rng, std::span<std::int32_t> row) {
  ++rounds_;
  last_wave_ = rng.uniform_below(inner_->n()) == 0;
  if (last_wave_) {
    ++waves_;
    auto here = inner_->current(rng);
    std::copy(here.begin(), here.end(), row.begin());
  } else {
    inner_->next_row(rng, row);
  }
}

std::unique_ptr<WalkerPolicy> staying_in_waves(std::unique_ptr<WalkerPolicy> inner) {
  return std::make_unique<StayingInWaves>(std::move(inner));
}

CouplingTrace simulate(CouplingPolicy& policy, std::size_t rows, std::uint64_t seed) {
  policy.reset();
  Rng rng(seed);
  CouplingTrace tr(policy.k());
  tr.reserve(rows);
  std::vector<std::uint8_t> row(policy.k());
  for (std::size_t t = 0; t < rows; ++t) {
    policy.next_row(rng, row);
    tr.push_row(row);
  }
  return tr;
}

WalkerTrace simulate(WalkerPolicy& policy, std::size_t rows, std::uint64_t seed) {
  policy.reset();
  Rng rng(seed);
  WalkerTrace tr(policy.n(), policy.k(), policy.looped());
  tr.reserve(rows);
  std::vector<std::int32_t> row(policy.k());
  for (std::size_t t = 0; t < rows; ++t) {
    policy.next_row(rng, row);
    tr.push_row(row);
  }
  return tr;
}

}  // namespace avoid
