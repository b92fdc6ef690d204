#include "cantorseq/modular_sequence.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <string>

#include "cantorseq/error.hpp"

namespace cantorseq {
namespace {

constexpr std::uint64_t kInverseTableLimit = std::uint64_t{1} << 18;

// c_{2m+j} for j in [-8, 8] from the two-index even identity with N + M = 2m + j, N - M = delta.
struct DoublingTerm {
  int target;    // j
  int delta;     // 2 for even j, 3 for odd j
  int n_offset;  // N - m
  int m_offset;  // M - m
};

constexpr std::array<DoublingTerm, 2 * kJumpHalfWidth + 1> make_doubling_schedule() {
  std::array<DoublingTerm, 2 * kJumpHalfWidth + 1> schedule{};
  for (int j = -kJumpHalfWidth; j <= kJumpHalfWidth; ++j) {
    const int delta = (j % 2 == 0) ? 2 : 3;
    schedule[static_cast<std::size_t>(j + kJumpHalfWidth)] = {j, delta, (j + delta) / 2, (j - delta) / 2};
  }
  return schedule;
}

constexpr auto kDoublingSchedule = make_doubling_schedule();

// Every index the identity reads, N +- 3 and M +- 3, must lie inside the source window.
constexpr bool doubling_schedule_covered() {
  for (const auto& t : kDoublingSchedule) {
    if (t.n_offset + t.m_offset != t.target || t.n_offset - t.m_offset != t.delta) return false;
    const int reach_n = (t.n_offset < 0 ? -t.n_offset : t.n_offset) + 3;
    const int reach_m = (t.m_offset < 0 ? -t.m_offset : t.m_offset) + 3;
    if (reach_n > kJumpHalfWidth || reach_m > kJumpHalfWidth) return false;
  }
  return true;
}

static_assert(doubling_schedule_covered(), "doubling schedule reads outside the half-width-8 window");

}  // namespace

ModularRecurrence::ModularRecurrence(const SomosCoefficients& coefficients, std::uint64_t p) : field_(p) {
  for (std::size_t i = 0; i < relations_.size(); ++i) {
    const auto& src = coefficients.relations[i];
    relations_[i].span = src.span;
    relations_[i].left = field_.reduce(src.left);
    for (std::size_t j = 0; j < src.inner.size(); ++j) relations_[i].inner[j] = field_.reduce(src.inner[j]);
  }
  if (p < kInverseTableLimit) {
    inverses_.assign(p, 0);
    inverses_[1] = 1;
    for (std::uint64_t a = 2; a < p; ++a) {
      inverses_[a] = static_cast<std::uint32_t>(field_.mul(p - p / a, inverses_[p % a]));
    }
  }
}

std::uint64_t ModularRecurrence::inverse(std::uint64_t a) const {
  return inverses_.empty() ? field_.inv(a) : inverses_[a];
}

std::optional<std::uint64_t> ModularRecurrence::try_next(
    std::span<const std::uint64_t, kRecurrenceWidth> w) const {
  // Target index 11 (relative to the window start); base s = 11 - span.
  for (const auto& rel : relations_) {
    const std::size_t s = kRecurrenceWidth - static_cast<std::size_t>(rel.span);
    const std::uint64_t denominator = field_.mul(rel.left, w[s]);
    if (denominator == 0) continue;
    std::uint64_t sum = 0;
    for (int i = 1; i <= rel.span / 2; ++i) {
      const std::uint64_t coeff = rel.inner[static_cast<std::size_t>(i - 1)];
      if (coeff == 0) continue;
      const std::uint64_t product = field_.mul(w[s + static_cast<std::size_t>(i)], w[kRecurrenceWidth - static_cast<std::size_t>(i)]);
      sum = field_.add(sum, field_.mul(coeff, product));
    }
    return field_.mul(sum, inverse(denominator));
  }
  return std::nullopt;
}

std::optional<std::uint64_t> ModularRecurrence::try_prev(
    std::span<const std::uint64_t, kRecurrenceWidth> w) const {
  // Target index -1; partner at span - 1.
  for (const auto& rel : relations_) {
    const std::size_t partner = static_cast<std::size_t>(rel.span) - 1;
    const std::uint64_t denominator = field_.mul(rel.left, w[partner]);
    if (denominator == 0) continue;
    std::uint64_t sum = 0;
    for (int i = 1; i <= rel.span / 2; ++i) {
      const std::uint64_t coeff = rel.inner[static_cast<std::size_t>(i - 1)];
      if (coeff == 0) continue;
      const std::uint64_t product =
          field_.mul(w[static_cast<std::size_t>(i - 1)], w[static_cast<std::size_t>(rel.span - 1 - i)]);
      sum = field_.add(sum, field_.mul(coeff, product));
    }
    return field_.mul(sum, inverse(denominator));
  }
  return std::nullopt;
}

std::uint64_t ModularRecurrence::next(std::span<const std::uint64_t, kRecurrenceWidth> w) const {
  if (auto value = try_next(w)) return *value;
  throw Error(ErrorKind::stuck_window, "no span relation applies going right mod " + std::to_string(prime()));
}

std::uint64_t ModularRecurrence::prev(std::span<const std::uint64_t, kRecurrenceWidth> w) const {
  if (auto value = try_prev(w)) return *value;
  throw Error(ErrorKind::stuck_window, "no span relation applies going left mod " + std::to_string(prime()));
}

Window::Window(std::int64_t base, int half_width, std::uint64_t p, std::vector<std::uint64_t> values)
    : base_(base), half_width_(half_width), p_(p), values_(std::move(values)) {
  if (half_width_ < 1 || values_.size() != static_cast<std::size_t>(2 * half_width_ + 1)) {
    throw Error(ErrorKind::invalid_argument, "window must hold exactly 2h + 1 residues");
  }
}

std::uint64_t Window::at(std::int64_t index) const {
  if (index < first_index() || index > last_index()) {
    throw Error(ErrorKind::invalid_argument, "index " + std::to_string(index) + " outside window [" +
                                                 std::to_string(first_index()) + ", " +
                                                 std::to_string(last_index()) + "]");
  }
  return values_[static_cast<std::size_t>(index - first_index())];
}

bool Window::has_four_consecutive_zeros() const noexcept {
  int run = 0;
  for (auto v : values_) {
    run = v == 0 ? run + 1 : 0;
    if (run >= 4) return true;
  }
  return false;
}

Window Window::reflected() const {
  std::vector<std::uint64_t> values(values_.rbegin(), values_.rend());
  for (auto& v : values) v = v == 0 ? 0 : p_ - v;
  return Window(-base_, half_width_, p_, std::move(values));
}

Window window_init(const SequenceSeed& seed, std::uint64_t p, int half_width) {
  if (half_width > SequenceSeed::kLastIndex) {
    ExactSequence sequence(seed, std::max<long>(kDefaultExactCap, half_width));
    return window_init(sequence, p, half_width);
  }
  if (half_width < 1) throw Error(ErrorKind::invalid_argument, "half-width must be positive");
  PrimeField field(p);
  std::vector<std::uint64_t> values;
  for (int n = -half_width; n <= half_width; ++n) values.push_back(field.reduce(seed.c(n)));
  return Window(0, half_width, p, std::move(values));
}

Window window_init(ExactSequence& sequence, std::uint64_t p, int half_width) {
  if (half_width < 1) throw Error(ErrorKind::invalid_argument, "half-width must be positive");
  PrimeField field(p);
  std::vector<std::uint64_t> values;
  for (int n = -half_width; n <= half_width; ++n) values.push_back(field.reduce(sequence.term(n)));
  return Window(0, half_width, p, std::move(values));
}

Window step(const Window& window, const ModularRecurrence& recurrence, Direction direction) {
  if (window.half_width() < 5) throw Error(ErrorKind::invalid_argument, "stepping needs half-width >= 5");
  if (window.modulus() != recurrence.prime()) throw Error(ErrorKind::invalid_argument, "modulus mismatch");
  const auto values = window.values();
  std::vector<std::uint64_t> shifted;
  shifted.reserve(values.size());
  if (direction == Direction::right) {
    const auto tail = values.last<kRecurrenceWidth>();
    const std::uint64_t incoming = recurrence.next(tail);
    shifted.assign(values.begin() + 1, values.end());
    shifted.push_back(incoming);
    return Window(window.base() + 1, window.half_width(), window.modulus(), std::move(shifted));
  }
  const auto head = values.first<kRecurrenceWidth>();
  const std::uint64_t incoming = recurrence.prev(head);
  shifted.push_back(incoming);
  shifted.insert(shifted.end(), values.begin(), values.end() - 1);
  return Window(window.base() - 1, window.half_width(), window.modulus(), std::move(shifted));
}

ModularScanner::ModularScanner(const SequenceSeed& seed, const ModularRecurrence& recurrence)
    : recurrence_(&recurrence), buffer_(4096, 0) {
  const PrimeField& field = recurrence.field();
  for (int n = -1; n <= SequenceSeed::kLastIndex; ++n) buffer_[end_++] = field.reduce(seed.c(n));
  index_ = SequenceSeed::kLastIndex;
}

std::uint64_t ModularScanner::advance() {
  if (end_ == buffer_.size()) {
    std::copy(buffer_.end() - kRecurrenceWidth, buffer_.end(), buffer_.begin());
    end_ = kRecurrenceWidth;
  }
  const std::uint64_t value = recurrence_->next(tail());
  buffer_[end_++] = value;
  ++index_;
  return value;
}

std::uint64_t term_mod_p(const SequenceSeed& seed, std::uint64_t p, std::int64_t n) {
  PrimeField field(p);
  if (n < 0) return field.neg(term_mod_p(seed, p, -n));
  if (n <= SequenceSeed::kLastIndex) return field.reduce(seed.c(static_cast<int>(n)));
  ModularRecurrence recurrence(SomosCoefficients::from_seed(seed), p);
  ModularScanner scanner(seed, recurrence);
  while (scanner.index() < n) scanner.advance();
  return scanner.newest();
}

ModularSequence::ModularSequence(const SequenceSeed& seed, std::uint64_t p)
    : recurrence_(SomosCoefficients::from_seed(seed), p), origin_(window_init(seed, p, kJumpHalfWidth)) {
  const PrimeField& f = recurrence_.field();
  c4_ = f.reduce(seed.c(4));
  const std::uint64_t c3 = f.reduce(seed.c(3));
  c3_squared_ = f.mul(c3, c3);
  can_jump_ = c3 != 0 && c4_ != 0;
  if (can_jump_) {
    inv_c4_c2_ = f.inv(c4_);  // c_2 = 1
    inv_c4_c3_ = f.inv(f.mul(c4_, c3));
  }
}

Window ModularSequence::double_window(const Window& w) const {
  const PrimeField& f = field();
  const std::int64_t m = w.base();
  const auto v = w.values();
  auto c = [&](int offset) { return v[static_cast<std::size_t>(offset + kJumpHalfWidth)]; };

  std::vector<std::uint64_t> out(v.size());
  for (const auto& t : kDoublingSchedule) {
    const int N = t.n_offset;
    const int M = t.m_offset;
    const std::uint64_t mp1mm1 = f.mul(c(M + 1), c(M - 1));
    const std::uint64_t mp2mm2 = f.mul(c(M + 2), c(M - 2));
    const std::uint64_t coeff2 = f.sub(f.mul(c4_, f.mul(c(M), c(M))), f.mul(c3_squared_, mp1mm1));
    const std::uint64_t coeff1 = f.sub(f.mul(c3_squared_, mp2mm2), f.mul(c(M + 3), c(M - 3)));
    const std::uint64_t coeff0 = f.mul(c4_, mp2mm2);

    std::uint64_t rhs = f.mul(mp1mm1, f.mul(c(N + 3), c(N - 3)));
    rhs = f.add(rhs, f.mul(coeff2, f.mul(c(N + 2), c(N - 2))));
    rhs = f.add(rhs, f.mul(coeff1, f.mul(c(N + 1), c(N - 1))));
    rhs = f.sub(rhs, f.mul(coeff0, f.mul(c(N), c(N))));

    out[static_cast<std::size_t>(t.target + kJumpHalfWidth)] =
        f.mul(rhs, t.delta == 2 ? inv_c4_c2_ : inv_c4_c3_);
  }
  return Window(2 * m, kJumpHalfWidth, prime(), std::move(out));
}

Window ModularSequence::jump(std::int64_t n) const {
  if (!can_jump_) {
    throw Error(ErrorKind::not_good_prime,
                "jumping mod " + std::to_string(prime()) + " needs c3 and c4 to be units");
  }
  if (n < 0) return jump(-n).reflected();
  Window w = origin_;
  int top = 62;
  while (top >= 0 && ((n >> top) & 1) == 0) --top;
  for (int bit = top; bit >= 0; --bit) {
    w = double_window(w);
    if ((n >> bit) & 1) w = step(w, recurrence_, Direction::right);
  }
  return w;
}

std::uint64_t ModularSequence::term(std::int64_t n) const { return jump(n).at(n); }

Window jump_window(const SequenceSeed& seed, std::uint64_t p, std::int64_t n) {
  return ModularSequence(seed, p).jump(n);
}

std::uint64_t hasse_weil_bound(std::uint64_t p) {
  const long double root = std::sqrt(static_cast<long double>(p));
  const long double bound = std::pow(1.0L + root, 4);
  return static_cast<std::uint64_t>(std::ceil(bound));
}

std::int64_t find_triple_zero(const SequenceSeed& seed, std::uint64_t p, std::optional<std::int64_t> cap) {
  const std::int64_t limit = cap.value_or(static_cast<std::int64_t>(hasse_weil_bound(p)));
  ModularRecurrence recurrence(SomosCoefficients::from_seed(seed), p);
  ModularScanner scanner(seed, recurrence);
  // Zero run ending at the newest index; the seed part starts at c_2 = 1.
  int run = 0;
  {
    PrimeField field(p);
    for (int n = 2; n <= SequenceSeed::kLastIndex; ++n) {
      run = field.reduce(seed.c(n)) == 0 ? run + 1 : 0;
      if (run >= 3) return n - 1;
    }
  }
  while (scanner.index() <= limit) {
    run = scanner.advance() == 0 ? run + 1 : 0;
    if (run >= 3) return scanner.index() - 1;
  }
  throw Error(ErrorKind::not_found_below_cap,
              "no triple zero below " + std::to_string(limit) + " mod " + std::to_string(p));
}

}  // namespace cantorseq
