#include "spinrev/pauli.hpp"

#include <utility>

#include "spinrev/error.hpp"

namespace spinrev {

namespace {

int wrap(int q) { return ((q % 4) + 4) % 4; }

// sigma_a sigma_b = i^q sigma_c.
std::pair<Pauli, int> multiply(Pauli a, Pauli b) {
  if (a == Pauli::I) return {b, 0};
  if (b == Pauli::I) return {a, 0};
  if (a == b) return {Pauli::I, 0};
  const int ia = static_cast<int>(a);
  const int ib = static_cast<int>(b);
  const auto c = static_cast<Pauli>(6 - ia - ib);
  // X->Y->Z->X is the cyclic order with phase +i.
  const bool cyclic = (ib - ia + 3) % 3 == 1;
  return {c, cyclic ? 1 : 3};
}

}  // namespace

char to_char(Pauli p) {
  switch (p) {
    case Pauli::I: return 'I';
    case Pauli::X: return 'X';
    case Pauli::Y: return 'Y';
    case Pauli::Z: return 'Z';
  }
  return '?';
}

PauliString::PauliString(int sites) {
  require(sites >= 0, "Pauli string needs a non-negative site count");
  letters_.assign(static_cast<std::size_t>(sites), Pauli::I);
}

PauliString::PauliString(std::vector<Pauli> letters, int quarter_turns)
    : letters_(std::move(letters)), quarter_turns_(wrap(quarter_turns)) {}

PauliString PauliString::single(int sites, int site, Pauli p) {
  require(site >= 0 && site < sites, "Pauli site out of range");
  PauliString s(sites);
  s.letters_[static_cast<std::size_t>(site)] = p;
  return s;
}

PauliString PauliString::parse(std::string_view text) {
  int q = 0;
  if (!text.empty() && (text.front() == '+' || text.front() == '-')) {
    if (text.front() == '-') q = 2;
    text.remove_prefix(1);
  }
  if (!text.empty() && text.front() == 'i') {
    q += 1;
    text.remove_prefix(1);
  }
  std::vector<Pauli> letters;
  for (char c : text) {
    switch (c) {
      case 'I': letters.push_back(Pauli::I); break;
      case 'X': letters.push_back(Pauli::X); break;
      case 'Y': letters.push_back(Pauli::Y); break;
      case 'Z': letters.push_back(Pauli::Z); break;
      default: fail(ErrorCode::InvalidArgument, std::string("bad Pauli letter '") + c + "'");
    }
  }
  return PauliString(std::move(letters), q);
}

std::complex<double> PauliString::phase() const {
  switch (quarter_turns_) {
    case 0: return {1.0, 0.0};
    case 1: return {0.0, 1.0};
    case 2: return {-1.0, 0.0};
    default: return {0.0, -1.0};
  }
}

PauliString PauliString::times_phase(int quarter_turns) const {
  PauliString out = *this;
  out.quarter_turns_ = wrap(quarter_turns_ + quarter_turns);
  return out;
}

PauliString PauliString::operator*(const PauliString& rhs) const {
  PauliString out = *this;
  out *= rhs;
  return out;
}

PauliString& PauliString::operator*=(const PauliString& rhs) {
  require(sites() == rhs.sites(), "multiplying Pauli strings of different lengths");
  int q = quarter_turns_ + rhs.quarter_turns_;
  for (std::size_t s = 0; s < letters_.size(); ++s) {
    auto [c, dq] = multiply(letters_[s], rhs.letters_[s]);
    letters_[s] = c;
    q += dq;
  }
  quarter_turns_ = wrap(q);
  return *this;
}

std::uint64_t PauliString::x_mask() const {
  require(sites() <= 63, "Pauli string too long for a bit mask");
  std::uint64_t m = 0;
  for (int p = 0; p < sites(); ++p) {
    const Pauli l = letters_[static_cast<std::size_t>(p)];
    if (l == Pauli::X || l == Pauli::Y) m |= std::uint64_t{1} << (sites() - 1 - p);
  }
  return m;
}

std::uint64_t PauliString::z_mask() const {
  require(sites() <= 63, "Pauli string too long for a bit mask");
  std::uint64_t m = 0;
  for (int p = 0; p < sites(); ++p) {
    const Pauli l = letters_[static_cast<std::size_t>(p)];
    if (l == Pauli::Z || l == Pauli::Y) m |= std::uint64_t{1} << (sites() - 1 - p);
  }
  return m;
}

int PauliString::y_count() const {
  int c = 0;
  for (Pauli l : letters_) c += l == Pauli::Y;
  return c;
}

std::string PauliString::str() const {
  static constexpr const char* kPrefix[] = {"+", "+i", "-", "-i"};
  std::string s = kPrefix[quarter_turns_];
  for (Pauli l : letters_) s.push_back(to_char(l));
  return s;
}

}  // namespace spinrev
