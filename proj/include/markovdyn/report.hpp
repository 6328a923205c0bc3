#ifndef MARKOVDYN_REPORT_HPP_
#define MARKOVDYN_REPORT_HPP_

#include <string>

#include "json.hpp"
#include "markovdyn/classify.hpp"
#include "markovdyn/dynamics.hpp"
#include "markovdyn/inverse_kernel.hpp"
#include "markovdyn/spectral.hpp"
#include "markovdyn/walk_oracle.hpp"

namespace markovdyn {

using Json = nlohmann::ordered_json;

inline constexpr const char* kSchemaVersion = "1";
std::string version();

// Non-finite doubles become null; JSON has no inf or nan.
Json number(double x);
Json number(Complex z);
Json numbers(const std::vector<double>& xs);
Json coordinates(const FinSeq& x);

Json to_json(const SeriesJudgement& j);
Json to_json(const SeriesTrace& t);
Json to_json(const ClassVerdict& v);
Json to_json(const Estimate& e);
Json to_json(const InverseResult& r);
Json to_json(const KernelBasis& b);
Json to_json(const SpectrumVerdict& v);
Json to_json(const DualVerdict& v);
Json to_json(const SymmetricIntervalReport& r);
Json to_json(const Certificate& c);
Json to_json(const OrbitProbeReport& r);

}  // namespace markovdyn

#endif  // MARKOVDYN_REPORT_HPP_
