#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "cantorseq/exact_sequence.hpp"
#include "cantorseq/modular.hpp"
#include "cantorseq/seed.hpp"

namespace cantorseq {

// Number of consecutive residues that determine the next one.
inline constexpr std::size_t kRecurrenceWidth = 11;
// Half-width of jump windows: c_{N-8} .. c_{N+8}.
inline constexpr int kJumpHalfWidth = 8;

enum class Direction { right, left };

// The four span relations reduced mod p. next()/prev() try spans 8, 9, 10, 11 in order and use
// the first whose left multiplier times pivot is a unit; pivots are c_{m+3}, c_{m+2}, c_{m+1}, c_m
// going right and the mirrored entries going left.
class ModularRecurrence {
 public:
  ModularRecurrence(const SomosCoefficients& coefficients, std::uint64_t p);

  const PrimeField& field() const noexcept { return field_; }
  std::uint64_t prime() const noexcept { return field_.modulus(); }

  // window = c_m .. c_{m+10}. Returns c_{m+11}; nullopt when no relation applies.
  std::optional<std::uint64_t> try_next(std::span<const std::uint64_t, kRecurrenceWidth> window) const;
  // Returns c_{m-1}; nullopt when no relation applies.
  std::optional<std::uint64_t> try_prev(std::span<const std::uint64_t, kRecurrenceWidth> window) const;

  // Throwing forms (Error stuck_window).
  std::uint64_t next(std::span<const std::uint64_t, kRecurrenceWidth> window) const;
  std::uint64_t prev(std::span<const std::uint64_t, kRecurrenceWidth> window) const;

 private:
  struct Relation {
    int span = 0;
    std::uint64_t left = 0;
    std::array<std::uint64_t, 5> inner{};
  };

  std::uint64_t inverse(std::uint64_t a) const;

  PrimeField field_;
  std::array<Relation, 4> relations_;
  std::vector<std::uint32_t> inverses_;  // filled for small p
};

// Residues c_{base-h} .. c_{base+h} mod p.
class Window {
 public:
  Window(std::int64_t base, int half_width, std::uint64_t p, std::vector<std::uint64_t> values);

  std::int64_t base() const noexcept { return base_; }
  int half_width() const noexcept { return half_width_; }
  std::uint64_t modulus() const noexcept { return p_; }
  std::int64_t first_index() const noexcept { return base_ - half_width_; }
  std::int64_t last_index() const noexcept { return base_ + half_width_; }
  std::span<const std::uint64_t> values() const noexcept { return values_; }

  // Absolute sequence index; throws invalid_argument outside the window.
  std::uint64_t at(std::int64_t index) const;
  bool same_values(const Window& other) const noexcept { return values_ == other.values_; }
  bool has_four_consecutive_zeros() const noexcept;
  // The window at -base, from c_{-n} = -c_n.
  Window reflected() const;

  bool operator==(const Window&) const = default;

 private:
  std::int64_t base_;
  int half_width_;
  std::uint64_t p_;
  std::vector<std::uint64_t> values_;
};

// Window at base 0. h <= 9 reads the seed directly; larger h extends the exact sequence.
Window window_init(const SequenceSeed& seed, std::uint64_t p, int half_width);
Window window_init(ExactSequence& sequence, std::uint64_t p, int half_width);

// Shift by one. Requires half_width >= 5. Throws stuck_window.
Window step(const Window& window, const ModularRecurrence& recurrence, Direction direction);

// Forward scan c_{-1}, c_0, c_1, ... mod p over a reusable buffer.
class ModularScanner {
 public:
  explicit ModularScanner(const SequenceSeed& seed, const ModularRecurrence& recurrence);

  // Index of the newest residue.
  std::int64_t index() const noexcept { return index_; }
  std::uint64_t newest() const noexcept { return buffer_[end_ - 1]; }
  // The 11 newest residues, oldest first.
  std::span<const std::uint64_t, kRecurrenceWidth> tail() const noexcept {
    return std::span<const std::uint64_t, kRecurrenceWidth>(buffer_.data() + end_ - kRecurrenceWidth,
                                                            kRecurrenceWidth);
  }
  // Computes the next residue; throws stuck_window.
  std::uint64_t advance();

 private:
  const ModularRecurrence* recurrence_;
  std::vector<std::uint64_t> buffer_;
  std::size_t end_ = 0;
  std::int64_t index_ = 0;
};

// Linear scan; O(|n|) steps.
std::uint64_t term_mod_p(const SequenceSeed& seed, std::uint64_t p, std::int64_t n);

// The residues of c_n mod p with logarithmic-time random access. Jumping doubles the window
// index with the two-index identity at difference 2 or 3 and divides by c4 c_2 or c4 c_3, so it
// needs p to divide neither c3 nor c4.
class ModularSequence {
 public:
  ModularSequence(const SequenceSeed& seed, std::uint64_t p);

  const PrimeField& field() const noexcept { return recurrence_.field(); }
  std::uint64_t prime() const noexcept { return recurrence_.prime(); }
  const ModularRecurrence& recurrence() const noexcept { return recurrence_; }
  const Window& origin() const noexcept { return origin_; }
  bool can_jump() const noexcept { return can_jump_; }

  // Window of half-width 8 centred at n. Throws not_good_prime when jumping is unavailable.
  Window jump(std::int64_t n) const;
  std::uint64_t term(std::int64_t n) const;

 private:
  Window double_window(const Window& window) const;

  ModularRecurrence recurrence_;
  Window origin_;
  bool can_jump_ = false;
  std::uint64_t c4_ = 0;
  std::uint64_t c3_squared_ = 0;
  std::uint64_t inv_c4_c2_ = 0;
  std::uint64_t inv_c4_c3_ = 0;
};

Window jump_window(const SequenceSeed& seed, std::uint64_t p, std::int64_t n);

// ceil((1 + sqrt p)^4), the Hasse-Weil bound on |Jac(C)(F_p)|.
std::uint64_t hasse_weil_bound(std::uint64_t p);

// Least r >= 3 with c_{r-1} = c_r = c_{r+1} = 0 mod p, scanning up to cap
// (default hasse_weil_bound(p)). Throws not_found_below_cap or stuck_window.
std::int64_t find_triple_zero(const SequenceSeed& seed, std::uint64_t p,
                              std::optional<std::int64_t> cap = std::nullopt);

}  // namespace cantorseq
