#include "spinrev/spinrev.h"

#include <algorithm>
#include <cstring>
#include <exception>
#include <memory>
#include <new>
#include <optional>
#include <string>
#include <vector>

#include "spinrev/entanglement.hpp"
#include "spinrev/error.hpp"
#include "spinrev/majorana.hpp"
#include "spinrev/profiles.hpp"
#include "spinrev/serialize.hpp"
#include "spinrev/statevec.hpp"

struct sr_profile {
  spinrev::StaticProfile value;
};

struct sr_permutation {
  spinrev::SignedPermutation value;
};

struct sr_spectrum {
  std::vector<double> eigenvalues;
  std::vector<double> closed_form;
  std::optional<spinrev::SignedPermutation> decoded;
};

struct sr_trace {
  std::vector<spinrev::TracePoint> points;
};

namespace {

thread_local std::string last_error;

sr_status set_error(sr_status status, const std::string& message) {
  last_error = message;
  return status;
}

template <typename F>
sr_status guarded(F&& body) {
  try {
    last_error.clear();
    return body();
  } catch (const spinrev::Error& e) {
    return set_error(static_cast<sr_status>(e.code()), e.what());
  } catch (const std::bad_alloc&) {
    return set_error(SR_RESOURCE, "out of memory");
  } catch (const std::exception& e) {
    return set_error(SR_INTERNAL, e.what());
  } catch (...) {
    return set_error(SR_INTERNAL, "unknown exception");
  }
}

sr_status null_argument(const char* name) {
  return set_error(SR_INVALID_ARGUMENT, std::string(name) + " must not be NULL");
}

template <typename T>
sr_status copy_out(const std::vector<T>& values, T* buf, size_t cap, size_t* needed) {
  if (!needed) return null_argument("needed");
  *needed = values.size();
  if (!buf || cap < values.size()) {
    return set_error(SR_BUFFER_TOO_SMALL, "buffer holds " + std::to_string(cap) + " of " +
                                              std::to_string(values.size()) + " elements");
  }
  std::copy(values.begin(), values.end(), buf);
  return SR_OK;
}

sr_status copy_string(const std::string& s, char* buf, size_t cap, size_t* needed) {
  if (!needed) return null_argument("needed");
  *needed = s.size() + 1;
  if (!buf || cap < s.size() + 1) {
    return set_error(SR_BUFFER_TOO_SMALL, "string needs " + std::to_string(s.size() + 1) + " bytes");
  }
  std::memcpy(buf, s.c_str(), s.size() + 1);
  return SR_OK;
}

sr_status make_permutation(spinrev::SignedPermutation p, sr_permutation** out) {
  *out = new sr_permutation{std::move(p)};
  return SR_OK;
}

}  // namespace

extern "C" {

SR_API const char* sr_last_error(void) { return last_error.c_str(); }

SR_API const char* sr_status_name(sr_status status) {
  switch (status) {
    case SR_OK: return "ok";
    case SR_INVALID_ARGUMENT: return "invalid argument";
    case SR_RESOURCE: return "resource limit";
    case SR_NOT_SIGNED_PERMUTATION: return "not a signed permutation";
    case SR_NOT_PAULI_STRING: return "not a Pauli string";
    case SR_CONVERGENCE: return "no convergence";
    case SR_DEGENERATE: return "degenerate spectrum";
    case SR_BUFFER_TOO_SMALL: return "buffer too small";
    case SR_INTERNAL: return "internal error";
  }
  return "unknown status";
}

SR_API const char* sr_version(void) { return "0.1.0"; }

SR_API sr_status sr_profile_create(int protocol, int n, int m, int uncorrected_field,
                                   sr_profile** out) {
  if (!out) return null_argument("out");
  *out = nullptr;
  return guarded([&] {
    spinrev::StaticProfile p;
    switch (protocol) {
      case SR_PROTOCOL_STATIC: p = spinrev::protocol1_profile(n); break;
      case SR_PROTOCOL_PULSED: p = spinrev::protocol2_profile(n); break;
      case SR_PROTOCOL_FAMILY:
        p = spinrev::protocol3_profile(n, m,
                                       uncorrected_field ? spinrev::FieldFactor::AsPrinted
                                                         : spinrev::FieldFactor::Corrected);
        break;
      default:
        return set_error(SR_INVALID_ARGUMENT, "protocol must be 1, 2 or 3");
    }
    *out = new sr_profile{std::move(p)};
    return SR_OK;
  });
}

SR_API void sr_profile_destroy(sr_profile* profile) { delete profile; }

SR_API sr_status sr_profile_get_info(const sr_profile* profile, sr_profile_info* out) {
  if (!profile) return null_argument("profile");
  if (!out) return null_argument("out");
  return guarded([&] {
    const spinrev::StaticProfile& p = profile->value;
    const spinrev::CouplingBound bound = spinrev::max_coupling(p);
    *out = {p.n,
            p.m ? *p.m : -1,
            static_cast<int>(p.protocol),
            p.duration,
            bound.value,
            bound.has_two_site ? 1 : 0,
            spinrev::uniformity(p),
            spinrev::normalized_time(p)};
    return SR_OK;
  });
}

SR_API sr_status sr_profile_couplings(const sr_profile* profile, double* buf, size_t cap,
                                      size_t* needed) {
  if (!profile) return null_argument("profile");
  return copy_out(profile->value.J, buf, cap, needed);
}

SR_API sr_status sr_profile_fields(const sr_profile* profile, double* buf, size_t cap,
                                   size_t* needed) {
  if (!profile) return null_argument("profile");
  return copy_out(profile->value.h, buf, cap, needed);
}

SR_API sr_status sr_profile_json(const sr_profile* profile, char* buf, size_t cap,
                                 size_t* needed) {
  if (!profile) return null_argument("profile");
  return guarded([&] { return copy_string(spinrev::profile_json(profile->value), buf, cap, needed); });
}

SR_API sr_status sr_verify_majorana(const sr_profile* profile, double tol, sr_verify_result* out) {
  if (!profile) return null_argument("profile");
  if (!out) return null_argument("out");
  if (!(tol > 0)) return set_error(SR_INVALID_ARGUMENT, "tol must be positive");
  return guarded([&] {
    const spinrev::StaticProfile& p = profile->value;
    double metric = 0.0;
    if (p.protocol == spinrev::Protocol::Pulsed) {
      const spinrev::SignedPermutation got = spinrev::braid_pulse_sequence(p.n);
      const spinrev::SignedPermutation want = spinrev::majorana_reversal_target(p.n);
      for (int k = 0; k < got.size(); ++k) {
        metric += got.perm[k] != want.perm[k] || got.sign[k] != want.sign[k];
      }
    } else {
      const auto g = spinrev::evolve_majorana(spinrev::build_coupling_matrix(p), 1.0);
      metric = spinrev::reversal_deviation(g, p.n);
    }
    *out = {metric <= tol ? 1 : 0, metric};
    return SR_OK;
  });
}

SR_API sr_status sr_verify_statevec(const sr_profile* profile, double tol, sr_verify_result* out) {
  if (!profile) return null_argument("profile");
  if (!out) return null_argument("out");
  if (!(tol > 0)) return set_error(SR_INVALID_ARGUMENT, "tol must be positive");
  return guarded([&] {
    const spinrev::StaticProfile& p = profile->value;
    const spinrev::DenseOperator u =
        p.protocol == spinrev::Protocol::Pulsed
            ? spinrev::pulse_sequence_unitary(p.n)
            : spinrev::exponentiate(spinrev::build_hamiltonian(p, false), p.duration);
    const double metric = spinrev::phase_distance(u, spinrev::reversal_unitary(p.n)).distance;
    *out = {metric <= tol ? 1 : 0, metric};
    return SR_OK;
  });
}

SR_API sr_status sr_permutation_from_profile(const sr_profile* profile, double tol,
                                             sr_permutation** out) {
  if (!profile) return null_argument("profile");
  if (!out) return null_argument("out");
  *out = nullptr;
  return guarded([&] {
    const spinrev::StaticProfile& p = profile->value;
    if (p.protocol == spinrev::Protocol::Pulsed) {
      return make_permutation(spinrev::braid_pulse_sequence(p.n), out);
    }
    const auto g = spinrev::evolve_majorana(spinrev::build_coupling_matrix(p), 1.0);
    return make_permutation(spinrev::embed_bulk(spinrev::extract_signed_permutation(g, tol)), out);
  });
}

SR_API sr_status sr_permutation_braid(int n, sr_permutation** out) {
  if (!out) return null_argument("out");
  *out = nullptr;
  return guarded([&] { return make_permutation(spinrev::braid_pulse_sequence(n), out); });
}

SR_API sr_status sr_permutation_target(int n, sr_permutation** out) {
  if (!out) return null_argument("out");
  *out = nullptr;
  return guarded([&] { return make_permutation(spinrev::majorana_reversal_target(n), out); });
}

SR_API sr_status sr_permutation_entries(const sr_permutation* p, int* perm, int* sign, size_t cap,
                                        size_t* needed) {
  if (!p) return null_argument("permutation");
  if (!needed) return null_argument("needed");
  const std::size_t size = p->value.perm.size();
  *needed = size;
  if (!perm || !sign || cap < size) {
    return set_error(SR_BUFFER_TOO_SMALL, "permutation has " + std::to_string(size) + " entries");
  }
  std::copy(p->value.perm.begin(), p->value.perm.end(), perm);
  std::copy(p->value.sign.begin(), p->value.sign.end(), sign);
  return SR_OK;
}

SR_API int sr_permutation_equal(const sr_permutation* a, const sr_permutation* b) {
  return a && b && a->value == b->value;
}

SR_API void sr_permutation_destroy(sr_permutation* p) { delete p; }

SR_API sr_status sr_spectrum_create(const sr_profile* profile, double tol, sr_spectrum** out) {
  if (!profile) return null_argument("profile");
  if (!out) return null_argument("out");
  *out = nullptr;
  return guarded([&] {
    const spinrev::StaticProfile& p = profile->value;
    if (p.protocol == spinrev::Protocol::Pulsed) {
      return set_error(SR_INVALID_ARGUMENT, "the pulsed protocol has no coupling matrix");
    }
    const spinrev::CouplingMatrix a = spinrev::build_coupling_matrix(p);
    auto s = std::make_unique<sr_spectrum>();
    s->eigenvalues = spinrev::numeric_eigenvalues(a);
    s->closed_form = spinrev::closed_form_spectrum(p.n, p.m.value_or(0));
    try {
      s->decoded = spinrev::embed_bulk(
          spinrev::extract_signed_permutation(spinrev::evolve_majorana(a, 1.0), tol));
    } catch (const spinrev::Error& e) {
      if (e.code() != spinrev::ErrorCode::NotASignedPermutation) throw;
    }
    *out = s.release();
    return SR_OK;
  });
}

SR_API sr_status sr_spectrum_eigenvalues(const sr_spectrum* s, double* buf, size_t cap,
                                         size_t* needed) {
  if (!s) return null_argument("spectrum");
  return copy_out(s->eigenvalues, buf, cap, needed);
}

SR_API sr_status sr_spectrum_closed_form(const sr_spectrum* s, double* buf, size_t cap,
                                         size_t* needed) {
  if (!s) return null_argument("spectrum");
  return copy_out(s->closed_form, buf, cap, needed);
}

SR_API int sr_spectrum_decoded(const sr_spectrum* s) { return s && s->decoded.has_value(); }

SR_API sr_status sr_spectrum_json(const sr_spectrum* s, char* buf, size_t cap, size_t* needed) {
  if (!s) return null_argument("spectrum");
  return guarded(
      [&] { return copy_string(spinrev::spectrum_json(s->eigenvalues, s->decoded), buf, cap, needed); });
}

SR_API void sr_spectrum_destroy(sr_spectrum* s) { delete s; }

SR_API sr_status sr_capacity(double* y_star, double* alpha) {
  return guarded([&] {
    const spinrev::CapacityResult c = spinrev::capacity_alpha();
    if (y_star) *y_star = c.y_star;
    if (alpha) *alpha = c.alpha;
    return SR_OK;
  });
}

SR_API sr_status sr_lower_bound_time(int n, double* out) {
  if (!out) return null_argument("out");
  return guarded([&] {
    *out = spinrev::lower_bound_time(n);
    return SR_OK;
  });
}

SR_API sr_status sr_optimality_ratio(int n, double* ratio, double* bound) {
  return guarded([&] {
    const spinrev::OptimalityRatio r = spinrev::optimality_ratio(n);
    if (ratio) *ratio = r.ratio;
    if (bound) *bound = r.bound;
    return SR_OK;
  });
}

SR_API sr_status sr_trace_create(int n, int steps, sr_trace** out) {
  if (!out) return null_argument("out");
  *out = nullptr;
  return guarded([&] {
    *out = new sr_trace{spinrev::bell_experiment(n, steps)};
    return SR_OK;
  });
}

SR_API size_t sr_trace_length(const sr_trace* trace) { return trace ? trace->points.size() : 0; }

SR_API sr_status sr_trace_point(const sr_trace* trace, size_t index, double* t, double* entropy,
                                double* bound) {
  if (!trace) return null_argument("trace");
  if (index >= trace->points.size()) return set_error(SR_INVALID_ARGUMENT, "trace index out of range");
  const spinrev::TracePoint& p = trace->points[index];
  if (t) *t = p.t;
  if (entropy) *entropy = p.entropy;
  if (bound) *bound = p.bound;
  return SR_OK;
}

SR_API sr_status sr_trace_csv(const sr_trace* trace, char* buf, size_t cap, size_t* needed) {
  if (!trace) return null_argument("trace");
  return guarded([&] { return copy_string(spinrev::trace_csv(trace->points), buf, cap, needed); });
}

SR_API void sr_trace_destroy(sr_trace* trace) { delete trace; }

}  // extern "C"
