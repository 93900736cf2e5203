#include "spinrev/serialize.hpp"

#include <cmath>
#include <cstdio>

namespace spinrev {

namespace {

std::string format(double x, const char* spec) {
  if (!std::isfinite(x)) return "null";
  char buf[40];
  std::snprintf(buf, sizeof buf, spec, x == 0.0 ? 0.0 : x);  // no "-0"
  return buf;
}

template <typename T, typename F>
void append_array(std::string& out, const std::vector<T>& values, F fmt) {
  out += '[';
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) out += ',';
    out += fmt(values[i]);
  }
  out += ']';
}

}  // namespace

std::string format_json_number(double x) { return format(x, "%.17g"); }
std::string format_csv_number(double x) { return format(x, "%.12g"); }

std::string profile_json(const StaticProfile& profile) {
  std::string out = "{\"n\":" + std::to_string(profile.n) + ",\"m\":";
  out += profile.m ? std::to_string(*profile.m) : "null";
  out += ",\"protocol\":" + std::to_string(static_cast<int>(profile.protocol));
  out += ",\"J\":";
  append_array(out, profile.J, format_json_number);
  out += ",\"h\":";
  append_array(out, profile.h, format_json_number);
  out += ",\"duration\":" + format_json_number(profile.duration) + "}";
  return out;
}

std::string spectrum_json(const std::vector<double>& eigenvalues,
                          const std::optional<SignedPermutation>& permutation) {
  std::string out = "{\"eigenvalues\":";
  append_array(out, eigenvalues, format_json_number);
  auto integer = [](int v) { return std::to_string(v); };
  out += ",\"perm\":";
  if (permutation) {
    append_array(out, permutation->perm, integer);
  } else {
    out += "null";
  }
  out += ",\"sign\":";
  if (permutation) {
    append_array(out, permutation->sign, integer);
  } else {
    out += "null";
  }
  out += '}';
  return out;
}

std::string trace_csv(const std::vector<TracePoint>& trace) {
  std::string out = "t,entropy_bits,alpha_t_bound\n";
  for (const TracePoint& p : trace) {
    out += format_csv_number(p.t) + ',' + format_csv_number(p.entropy) + ',' +
           format_csv_number(p.bound) + '\n';
  }
  return out;
}

}  // namespace spinrev
