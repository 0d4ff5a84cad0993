#pragma once

#include <string>
#include <vector>

#include "balls.hpp"
#include "distance_set.hpp"
#include "gamma.hpp"
#include "order_type.hpp"
#include "space.hpp"

namespace umk {

enum class Format { Text, Json };

/// {"labels": [...], "matrix": [["p/q", ...], ...]} with canonical rational
/// strings. Parse errors carry the offending position.
FiniteSpace space_from_json(const std::string& text);
std::string space_to_json(const FiniteSpace& space);

/// Square matrix with labels in the first row and first column; the corner
/// cell is ignored.
FiniteSpace space_from_csv(const std::string& text);
std::string space_to_csv(const FiniteSpace& space);

/// {"head": ["0", ...]} optionally with "tail": a rule object
/// {"rule": "reciprocal"|"shifted"|"geometric"|"approach"|"concat",
///  "params": {...}}. concat holds "first" and "second" rule objects.
SetDescription description_from_json(const std::string& text);
std::string description_to_json(const SetDescription& desc);

/// {"gamma": ["g0", ...], "labels": [...], "matrix": [["g0", ...], ...]}.
GammaDistance gamma_from_json(const std::string& text);
std::string gamma_to_json(const GammaDistance& gd);

std::string render_report(const ValidationReport& report, Format format);
std::string render_distance_set(const DistanceSet& ds, Format format);
std::string render_order_type(const OrderTypeClass& order, Format format);
std::string render_tb_check(const TbCheckResult& result, Format format);
std::string render_ball(const Ball& ball, Format format);
std::string render_partition(const BallPartition& partition, Format format);
std::string render_members(const std::vector<std::string>& members, Format format);

/// Comma-separated rationals, e.g. "0,1/2,1".
std::vector<Rat> parse_rat_list(const std::string& text);
/// Classes split by '|', members by ',', e.g. "a|b,c".
std::vector<std::vector<std::string>> parse_class_spec(const std::string& text);
std::vector<std::string> parse_label_list(const std::string& text);

}  // namespace umk
