#pragma once

#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "avoid/rng.hpp"
#include "avoid/trace.hpp"

namespace avoid {

/// Stateful generator of occupancy rows. Deterministic given the Rng stream.
class CouplingPolicy {
 public:
  virtual ~CouplingPolicy() = default;
  virtual std::uint32_t k() const = 0;
  virtual std::string name() const = 0;
  virtual void reset() {}
  virtual void next_row(Rng& rng, std::span<std::uint8_t> row) = 0;
};

/// k independent Bernoulli(p) walkers. Faithful, but collides for k >= 2.
class IndependentPolicy final : public CouplingPolicy {
 public:
  IndependentPolicy(std::uint32_t k, double p);
  std::uint32_t k() const override { return k_; }
  std::string name() const override;
  void next_row(Rng& rng, std::span<std::uint8_t> row) override;

 private:
  std::uint32_t k_;
  double p_;
};

/// Row t has its single 1 at walker ((t-1) mod k) + 1. Avoiding, not faithful.
class RoundRobinPolicy final : public CouplingPolicy {
 public:
  explicit RoundRobinPolicy(std::uint32_t k);
  std::uint32_t k() const override { return k_; }
  std::string name() const override;
  void reset() override { turn_ = 0; }
  void next_row(Rng& rng, std::span<std::uint8_t> row) override;

 private:
  std::uint32_t k_;
  std::uint32_t turn_ = 0;
};

/// A single i.i.d. Bernoulli(p) walker: the one genuinely faithful coupling shipped.
std::unique_ptr<CouplingPolicy> trivial_k1(double p);

/// Stateful generator of walker positions on K_n or K_n^*.
class WalkerPolicy {
 public:
  virtual ~WalkerPolicy() = default;
  virtual std::uint32_t n() const = 0;
  virtual std::uint32_t k() const = 0;
  virtual bool looped() const = 0;
  virtual std::string name() const = 0;
  virtual void reset() = 0;
  /// Positions before the next round (placing the walkers on first use).
  virtual std::span<const std::int32_t> current(Rng& rng) = 0;
  virtual void next_row(Rng& rng, std::span<std::int32_t> row) = 0;
};

/// Each walker, at its turn, jumps to a uniform vertex not occupied by any
/// other walker (and, on K_n, different from its own). With k = 1 this is
/// the simple random walk. Initial placement is a uniform injection.
class GreedyAvoidingWalkers final : public WalkerPolicy {
 public:
  /// Throws DomainError if n is too small for every walker to have a move.
  GreedyAvoidingWalkers(std::uint32_t n, std::uint32_t k, bool looped);
  std::uint32_t n() const override { return n_; }
  std::uint32_t k() const override { return k_; }
  bool looped() const override { return looped_; }
  std::string name() const override;
  void reset() override { pos_.clear(); }
  std::span<const std::int32_t> current(Rng& rng) override;
  void next_row(Rng& rng, std::span<std::int32_t> row) override;

 private:
  std::uint32_t n_;
  std::uint32_t k_;
  bool looped_;
  std::vector<std::int32_t> pos_;
  std::vector<std::int32_t> candidates_;
};

/// Before each round, with probability 1/n every walker stays put for the
/// whole round; otherwise the inner policy moves. Turns a coupling on K_n
/// into one on K_n^*.
class StayingInWaves final : public WalkerPolicy {
 public:
  explicit StayingInWaves(std::unique_ptr<WalkerPolicy> inner);
  std::uint32_t n() const override { return inner_->n(); }
  std::uint32_t k() const override { return inner_->k(); }
  bool looped() const override { return true; }
  std::string name() const override;
  void reset() override;
  std::span<const std::int32_t> current(Rng& rng) override { return inner_->current(rng); }
  void next_row(Rng& rng, std::span<std::int32_t> row) override;

  bool last_round_was_wave() const { return last_wave_; }
  std::uint64_t waves() const { return waves_; }
  std::uint64_t rounds() const { return rounds_; }

 private:
  std::unique_ptr<WalkerPolicy> inner_;
  bool last_wave_ = false;
  std::uint64_t waves_ = 0;
  std::uint64_t rounds_ = 0;
};

std::unique_ptr<WalkerPolicy> staying_in_waves(std::unique_ptr<WalkerPolicy> inner);

/// Resets the policy and draws T rows from Rng(seed).
CouplingTrace simulate(CouplingPolicy& policy, std::size_t rows, std::uint64_t seed);
WalkerTrace simulate(WalkerPolicy& policy, std::size_t rows, std::uint64_t seed);

}  // namespace avoid
