#pragma once

#include <span>
#include <string>
#include <vector>

#include "json.hpp"

#include "coxbound/carpet.hpp"
#include "coxbound/classify.hpp"
#include "coxbound/davis.hpp"
#include "coxbound/k5.hpp"
#include "coxbound/nerve.hpp"
#include "coxbound/sweep.hpp"

namespace coxbound {

using Json = nlohmann::ordered_json;

std::string subset_name(const CoxeterSystem& sys, GeneratorSet subset);

Json report_json(const ClassificationReport& r);
Json nerve_json(const CoxeterSystem& sys, const NerveComplex& nerve);
/// Ball combinatorics plus link checks at every interior vertex.
Json davis_ball_json(const DavisBall& ball);
Json carpet_json(const CarpetApprox& c, std::span<const MarkedPoint> marked, const CarpetStar* star);
Json k5_json(const K5Scaffold& s, const K5Verdict& v);
Json sweep_json(const std::vector<SweepRow>& rows);

/// Header: n,signature,boundary,boundary_note,hyperbolic
std::string sweep_csv(const std::vector<SweepRow>& rows);

}  // namespace coxbound
