#include "umkit.h"

#include <cstring>
#include <string>

#include "balls.hpp"
#include "construct.hpp"
#include "dendrogram.hpp"
#include "distance_set.hpp"
#include "errors.hpp"
#include "gamma.hpp"
#include "io.hpp"
#include "order_type.hpp"
#include "space.hpp"

struct umk_space {
  umk::FiniteSpace value;
};
struct umk_report {
  umk::ValidationReport value;
};
struct umk_gamma {
  umk::GammaDistance value;
};

namespace {

thread_local std::string g_last_error;

umk_status fail(umk_status code, const char* message) {
  g_last_error = message;
  return code;
}

// Runs fn, translating exceptions into status codes.
template <typename Fn>
umk_status guarded(Fn&& fn) {
  try {
    fn();
    return UMK_OK;
  } catch (const umk::ParseError& e) {
    return fail(UMK_ERR_PARSE, e.what());
  } catch (const umk::StructureError& e) {
    return fail(UMK_ERR_STRUCTURE, e.what());
  } catch (const umk::PreconditionError& e) {
    return fail(UMK_ERR_PRECONDITION, e.what());
  } catch (const umk::OverflowError& e) {
    return fail(UMK_ERR_OVERFLOW, e.what());
  } catch (const std::exception& e) {
    return fail(UMK_ERR_INTERNAL, e.what());
  } catch (...) {
    return fail(UMK_ERR_INTERNAL, "unknown error");
  }
}

char* copy_string(const std::string& s) {
  char* out = new char[s.size() + 1];
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

umk::Format to_format(umk_format format) {
  return format == UMK_FORMAT_JSON ? umk::Format::Json : umk::Format::Text;
}

constexpr const char* kNullArg = "null argument";

template <typename Fn>
umk_status report_call(const umk_space* space, umk_report** out, Fn&& fn) {
  if (!space || !out) return fail(UMK_ERR_ARGUMENT, kNullArg);
  return guarded([&] { *out = new umk_report{fn(space->value)}; });
}

}  // namespace

extern "C" {

const char* umk_last_error(void) { return g_last_error.c_str(); }

void umk_string_free(char* text) { delete[] text; }
void umk_space_free(umk_space* space) { delete space; }
void umk_report_free(umk_report* report) { delete report; }
void umk_gamma_free(umk_gamma* gamma) { delete gamma; }

umk_status umk_space_from_json(const char* text, umk_space** out) {
  if (!text || !out) return fail(UMK_ERR_ARGUMENT, kNullArg);
  return guarded([&] { *out = new umk_space{umk::space_from_json(text)}; });
}

umk_status umk_space_from_csv(const char* text, umk_space** out) {
  if (!text || !out) return fail(UMK_ERR_ARGUMENT, kNullArg);
  return guarded([&] { *out = new umk_space{umk::space_from_csv(text)}; });
}

umk_status umk_space_to_json(const umk_space* space, char** out) {
  if (!space || !out) return fail(UMK_ERR_ARGUMENT, kNullArg);
  return guarded([&] { *out = copy_string(umk::space_to_json(space->value)); });
}

size_t umk_space_point_count(const umk_space* space) { return space ? space->value.size() : 0; }

umk_status umk_space_label(const umk_space* space, size_t index, char** out) {
  if (!space || !out) return fail(UMK_ERR_ARGUMENT, kNullArg);
  if (index >= space->value.size()) return fail(UMK_ERR_ARGUMENT, "label index out of range");
  return guarded([&] { *out = copy_string(space->value.label(index)); });
}

umk_status umk_space_diameter(const umk_space* space, char** out) {
  if (!space || !out) return fail(UMK_ERR_ARGUMENT, kNullArg);
  return guarded([&] { *out = copy_string(umk::diameter(space->value).str()); });
}

umk_status umk_validate_metric(const umk_space* space, umk_report** out) {
  return report_call(space, out, [](const umk::FiniteSpace& s) { return umk::validate_metric(s); });
}

umk_status umk_validate_ultrametric(const umk_space* space, umk_report** out) {
  return report_call(space, out,
                     [](const umk::FiniteSpace& s) { return umk::validate_ultrametric(s); });
}

umk_status umk_isosceles_witnesses(const umk_space* space, umk_report** out) {
  return report_call(space, out, [](const umk::FiniteSpace& s) {
    umk::ValidationReport report;
    for (const auto& t : umk::isosceles_witnesses(s)) {
      report.witnesses.push_back({{t[0], t[1], t[2]}, "isosceles", "-", "-"});
    }
    return report;
  });
}

umk_status umk_four_point_check(const umk_space* space, umk_report** out) {
  return report_call(space, out, [](const umk::FiniteSpace& s) {
    umk::ValidationReport report;
    for (const auto& t : umk::four_point_check(s)) {
      report.witnesses.push_back({{t[0], t[1], t[2], t[3]}, "four_point", "-", "-"});
    }
    return report;
  });
}

umk_status umk_center_invariance_check(const umk_space* space, umk_report** out) {
  return report_call(space, out,
                     [](const umk::FiniteSpace& s) { return umk::center_invariance_check(s); });
}

umk_status umk_nested_or_disjoint_check(const umk_space* space, umk_report** out) {
  return report_call(space, out,
                     [](const umk::FiniteSpace& s) { return umk::nested_or_disjoint_check(s); });
}

int umk_report_valid(const umk_report* report) {
  return report && report->value.valid() ? 1 : 0;
}

size_t umk_report_witness_count(const umk_report* report) {
  return report ? report->value.witnesses.size() : 0;
}

umk_status umk_report_render(const umk_report* report, umk_format format, char** out) {
  if (!report || !out) return fail(UMK_ERR_ARGUMENT, kNullArg);
  return guarded(
      [&] { *out = copy_string(umk::render_report(report->value, to_format(format))); });
}

umk_status umk_distance_set(const umk_space* space, umk_format format, char** out) {
  if (!space || !out) return fail(UMK_ERR_ARGUMENT, kNullArg);
  return guarded([&] {
    *out = copy_string(umk::render_distance_set(umk::distance_set(space->value), to_format(format)));
  });
}

umk_status umk_classify_order_type(const char* description_json, umk_format format, char** out) {
  if (!description_json || !out) return fail(UMK_ERR_ARGUMENT, kNullArg);
  return guarded([&] {
    const auto desc = umk::description_from_json(description_json);
    *out = copy_string(umk::render_order_type(umk::classify_order_type(desc), to_format(format)));
  });
}

umk_status umk_tb_distance_set_check(const char* description_json, umk_format format, int* result,
                                     char** out) {
  if (!description_json || !result || !out) return fail(UMK_ERR_ARGUMENT, kNullArg);
  return guarded([&] {
    const auto desc = umk::description_from_json(description_json);
    const auto check = umk::tb_distance_set_check(desc);
    *result = check.totally_boundable ? 1 : 0;
    *out = copy_string(umk::render_tb_check(check, to_format(format)));
  });
}

umk_status umk_open_ball(const umk_space* space, const char* center, const char* radius,
                         umk_format format, char** out) {
  if (!space || !center || !radius || !out) return fail(UMK_ERR_ARGUMENT, kNullArg);
  return guarded([&] {
    const auto ball = umk::open_ball(space->value, center, umk::Rat::parse(radius));
    *out = copy_string(umk::render_ball(ball, to_format(format)));
  });
}

umk_status umk_ball_partition(const umk_space* space, const char* radius, const char* candidates,
                              umk_format format, char** out) {
  if (!space || !radius || !out) return fail(UMK_ERR_ARGUMENT, kNullArg);
  return guarded([&] {
    const std::vector<std::string> cand =
        candidates ? umk::parse_label_list(candidates) : space->value.labels();
    const auto partition = umk::ball_partition(space->value, umk::Rat::parse(radius), cand);
    *out = copy_string(umk::render_partition(partition, to_format(format)));
  });
}

umk_status umk_dendrogram_json(const umk_space* space, char** out) {
  if (!space || !out) return fail(UMK_ERR_ARGUMENT, kNullArg);
  return guarded([&] {
    *out = copy_string(umk::dendrogram_to_json(umk::build_dendrogram(space->value)));
  });
}

umk_status umk_dendrogram_newick(const umk_space* space, char** out) {
  if (!space || !out) return fail(UMK_ERR_ARGUMENT, kNullArg);
  return guarded([&] {
    *out = copy_string(umk::dendrogram_to_newick(umk::build_dendrogram(space->value)));
  });
}

umk_status umk_construct_dlps(const char* values_csv, umk_space** out) {
  if (!values_csv || !out) return fail(UMK_ERR_ARGUMENT, kNullArg);
  return guarded(
      [&] { *out = new umk_space{umk::dlps_space(umk::parse_rat_list(values_csv))}; });
}

umk_status umk_construct_partition(const char* classes_spec, umk_space** out) {
  if (!classes_spec || !out) return fail(UMK_ERR_ARGUMENT, kNullArg);
  return guarded([&] {
    *out = new umk_space{umk::partition_discrete(umk::parse_class_spec(classes_spec))};
  });
}

umk_status umk_construct_modify(const umk_space* space, const char* radius,
                                const char* g_values_csv, umk_space** out) {
  if (!space || !radius || !g_values_csv || !out) return fail(UMK_ERR_ARGUMENT, kNullArg);
  return guarded([&] {
    *out = new umk_space{umk::modify_ultrametric(space->value, umk::Rat::parse(radius),
                                                 umk::parse_rat_list(g_values_csv))};
  });
}

umk_status umk_construct_compose(const umk_space* space, const char* function_name,
                                 umk_space** out) {
  if (!space || !function_name || !out) return fail(UMK_ERR_ARGUMENT, kNullArg);
  return guarded([&] {
    const auto& catalog = umk::preserving_catalog();
    const auto it = catalog.find(function_name);
    if (it == catalog.end()) {
      throw umk::StructureError("unknown preserving function '" + std::string(function_name) +
                                "'");
    }
    *out = new umk_space{umk::compose_preserving(space->value, it->second)};
  });
}

umk_status umk_gamma_from_json(const char* text, umk_gamma** out) {
  if (!text || !out) return fail(UMK_ERR_ARGUMENT, kNullArg);
  return guarded([&] { *out = new umk_gamma{umk::gamma_from_json(text)}; });
}

umk_status umk_gamma_validate(const umk_gamma* gamma, umk_report** out) {
  if (!gamma || !out) return fail(UMK_ERR_ARGUMENT, kNullArg);
  return guarded([&] { *out = new umk_report{umk::validate_gamma_distance(gamma->value)}; });
}

umk_status umk_gamma_ball(const umk_gamma* gamma, const char* center, const char* element,
                          umk_format format, char** out) {
  if (!gamma || !center || !element || !out) return fail(UMK_ERR_ARGUMENT, kNullArg);
  return guarded([&] {
    const auto members = umk::gamma_ball(gamma->value, center, element);
    *out = copy_string(umk::render_members(members, to_format(format)));
  });
}

umk_status umk_gamma_base_check(const umk_gamma* gamma, umk_format format, int* holds,
                                char** out) {
  if (!gamma || !holds || !out) return fail(UMK_ERR_ARGUMENT, kNullArg);
  return guarded([&] {
    const auto result = umk::gamma_base_check(gamma->value);
    *holds = result.holds ? 1 : 0;
    *out = copy_string(umk::render_report(result.report, to_format(format)));
  });
}

}  // extern "C"
