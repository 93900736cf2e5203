#pragma once

#include <complex>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace spinrev {

enum class Pauli : std::uint8_t { I = 0, X = 1, Y = 2, Z = 3 };

char to_char(Pauli p);

/// i^q times a tensor product of single-site Paulis. Letter 0 is the most
/// significant tensor factor.
class PauliString {
 public:
  PauliString() = default;
  explicit PauliString(int sites);
  explicit PauliString(std::vector<Pauli> letters, int quarter_turns = 0);

  static PauliString single(int sites, int site, Pauli p);
  /// Accepts an optional phase prefix ("+", "-", "i", "+i", "-i") followed by
  /// one of I, X, Y, Z per site, e.g. "-iXZY".
  static PauliString parse(std::string_view text);

  int sites() const { return static_cast<int>(letters_.size()); }
  Pauli letter(int site) const { return letters_.at(static_cast<std::size_t>(site)); }
  const std::vector<Pauli>& letters() const { return letters_; }

  /// Phase as a power of i, in 0..3.
  int quarter_turns() const { return quarter_turns_; }
  std::complex<double> phase() const;

  PauliString times_phase(int quarter_turns) const;
  PauliString operator*(const PauliString& rhs) const;
  PauliString& operator*=(const PauliString& rhs);
  PauliString operator-() const { return times_phase(2); }

  /// Bit masks over sites (bit sites-1-p for letter p): X component, Z component.
  std::uint64_t x_mask() const;
  std::uint64_t z_mask() const;
  int y_count() const;

  std::string str() const;

  bool operator==(const PauliString&) const = default;

 private:
  std::vector<Pauli> letters_;
  int quarter_turns_ = 0;
};

}  // namespace spinrev
