#pragma once

#include <optional>
#include <string>
#include <vector>

#include "spinrev/entanglement.hpp"
#include "spinrev/majorana.hpp"
#include "spinrev/profiles.hpp"

namespace spinrev {

// JSON numbers use 17 significant digits, CSV uses 12. Output is a pure
// function of the input so repeated runs are byte-identical.
std::string format_json_number(double x);
std::string format_csv_number(double x);

std::string profile_json(const StaticProfile& profile);

/// {"eigenvalues": [...], "perm": [...], "sign": [...]}; perm and sign are
/// null when the propagator did not decode.
std::string spectrum_json(const std::vector<double>& eigenvalues,
                          const std::optional<SignedPermutation>& permutation);

/// Header "t,entropy_bits,alpha_t_bound" followed by one row per point.
std::string trace_csv(const std::vector<TracePoint>& trace);

}  // namespace spinrev
