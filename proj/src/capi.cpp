#include "sforest.h"

#include <cstring>
#include <exception>
#include <new>
#include <string>

#include "sforest/driver.hpp"
#include "sforest/exact.hpp"
#include "sforest/formulations.hpp"
#include "sforest/instance.hpp"

using namespace sforest;

struct sf_instance {
    SfpInstance impl;
};

namespace {

thread_local std::string g_last_error = "no error";

sf_status fail(sf_status code, const std::string& message) {
    g_last_error = message;
    return code;
}

char* dup_string(const std::string& s) {
    char* out = new (std::nothrow) char[s.size() + 1];
    if (out) std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

Kind to_kind(int kind) { return kAllKinds[static_cast<std::size_t>(kind)]; }

int from_kind(Kind kind) {
    for (int i = 0; i < static_cast<int>(kAllKinds.size()); ++i) {
        if (kAllKinds[static_cast<std::size_t>(i)] == kind) return i;
    }
    return -1;
}

bool valid_kind(int kind) { return kind >= 0 && kind < static_cast<int>(kAllKinds.size()); }

Limits make_limits(double time_limit_s, int max_rounds) {
    Limits limits;
    if (time_limit_s > 0) limits.time_limit_s = time_limit_s;
    if (max_rounds > 0) limits.max_rounds = max_rounds;
    return limits;
}

void fill_report(const BoundReport& r, sf_bound_report* out) {
    out->kind = from_kind(r.kind);
    out->status = static_cast<int>(r.status);
    out->bound = r.bound;
    out->rounds = r.rounds;
    out->cuts_added = r.cuts_added;
    out->wall_time_s = r.wall_time_s;
    std::strncpy(out->detail, r.detail.c_str(), sizeof(out->detail) - 1);
    out->detail[sizeof(out->detail) - 1] = '\0';
}

template <typename Fn>
sf_status guarded(Fn&& fn) {
    try {
        return fn();
    } catch (const BuildRefused& e) {
        return fail(SF_ERR_BUILD_REFUSED, e.what());
    } catch (const std::invalid_argument& e) {
        return fail(SF_ERR_INVALID_ARGUMENT, e.what());
    } catch (const std::exception& e) {
        return fail(SF_ERR_INTERNAL, e.what());
    }
}

}  // namespace

extern "C" {

const char* sf_last_error(void) { return g_last_error.c_str(); }

sf_status sf_instance_load(const char* path, sf_instance** out) {
    if (!path || !out) return fail(SF_ERR_INVALID_ARGUMENT, "null argument");
    return guarded([&] {
        try {
            *out = new sf_instance{load_instance(path)};
        } catch (const std::runtime_error& e) {
            return fail(SF_ERR_PARSE, e.what());
        }
        return SF_OK;
    });
}

sf_status sf_instance_parse(const char* text, sf_instance** out) {
    if (!text || !out) return fail(SF_ERR_INVALID_ARGUMENT, "null argument");
    return guarded([&] {
        try {
            *out = new sf_instance{parse_instance_text(text)};
        } catch (const std::runtime_error& e) {
            return fail(SF_ERR_PARSE, e.what());
        }
        return SF_OK;
    });
}

sf_status sf_instance_generate(int n, int k, double p, double alpha, uint64_t seed,
                               sf_instance** out) {
    if (!out) return fail(SF_ERR_INVALID_ARGUMENT, "null output");
    return guarded([&] {
        *out = new sf_instance{generate(n, k, p, alpha, seed)};
        return SF_OK;
    });
}

sf_status sf_instance_save(const sf_instance* inst, const char* path) {
    if (!inst || !path) return fail(SF_ERR_INVALID_ARGUMENT, "null argument");
    return guarded([&] {
        try {
            save_instance(inst->impl, path);
        } catch (const std::runtime_error& e) {
            return fail(SF_ERR_IO, e.what());
        }
        return SF_OK;
    });
}

sf_status sf_instance_to_string(const sf_instance* inst, char** out) {
    if (!inst || !out) return fail(SF_ERR_INVALID_ARGUMENT, "null argument");
    return guarded([&] {
        *out = dup_string(serialize(inst->impl));
        return *out ? SF_OK : fail(SF_ERR_INTERNAL, "allocation failed");
    });
}

void sf_instance_free(sf_instance* inst) { delete inst; }

void sf_string_free(char* s) { delete[] s; }

int sf_instance_nodes(const sf_instance* inst) { return inst ? inst->impl.node_count() : 0; }
int sf_instance_edges(const sf_instance* inst) { return inst ? inst->impl.edge_count() : 0; }
int sf_instance_sets(const sf_instance* inst) { return inst ? inst->impl.set_count() : 0; }

int sf_kind_count(void) { return static_cast<int>(kAllKinds.size()); }

const char* sf_kind_name(int kind) {
    if (!valid_kind(kind)) return "";
    return kind_name(to_kind(kind));
}

sf_status sf_kind_parse(const char* name, int* out_kind) {
    if (!name || !out_kind) return fail(SF_ERR_INVALID_ARGUMENT, "null argument");
    auto parsed = parse_kind(name);
    if (!parsed) return fail(SF_ERR_INVALID_ARGUMENT, std::string("unknown kind: ") + name);
    *out_kind = from_kind(*parsed);
    return SF_OK;
}

const char* sf_run_status_name(int status) {
    if (status < 0 || status > 3) return "?";
    return run_status_name(static_cast<RunStatus>(status));
}

sf_status sf_solve_relaxation(const sf_instance* inst, int kind, double time_limit_s,
                              int max_rounds, sf_bound_report* out) {
    if (!inst || !out) return fail(SF_ERR_INVALID_ARGUMENT, "null argument");
    if (!valid_kind(kind)) return fail(SF_ERR_INVALID_ARGUMENT, "kind out of range");
    return guarded([&] {
        BoundReport r =
            solve_relaxation(inst->impl, to_kind(kind), make_limits(time_limit_s, max_rounds));
        fill_report(r, out);
        return SF_OK;
    });
}

sf_status sf_compare(const sf_instance* inst, const int* kinds, int kind_count,
                     double time_limit_s, int max_rounds, sf_bound_report* reports,
                     sf_dominance_check* audit, int audit_capacity, int* audit_count,
                     int* all_passed) {
    if (!inst || !kinds || !reports) return fail(SF_ERR_INVALID_ARGUMENT, "null argument");
    if (kind_count < 2) return fail(SF_ERR_INVALID_ARGUMENT, "compare needs at least two kinds");
    for (int i = 0; i < kind_count; ++i) {
        if (!valid_kind(kinds[i])) return fail(SF_ERR_INVALID_ARGUMENT, "kind out of range");
    }
    return guarded([&] {
        std::vector<Kind> ks;
        for (int i = 0; i < kind_count; ++i) ks.push_back(to_kind(kinds[i]));
        Comparison cmp = compare(inst->impl, ks, make_limits(time_limit_s, max_rounds));
        for (int i = 0; i < kind_count; ++i) fill_report(cmp.reports[static_cast<std::size_t>(i)], &reports[i]);
        int count = 0;
        for (const DominanceCheck& chk : cmp.audit) {
            if (audit && count < audit_capacity) {
                sf_dominance_check& out = audit[count];
                out.weaker = from_kind(chk.weaker);
                out.stronger = from_kind(chk.stronger);
                out.equality = chk.equality ? 1 : 0;
                out.applicable = chk.applicable ? 1 : 0;
                out.passed = chk.passed ? 1 : 0;
                out.lhs = chk.lhs;
                out.rhs = chk.rhs;
            }
            ++count;
        }
        if (audit_count) *audit_count = count;
        if (all_passed) *all_passed = cmp.all_passed ? 1 : 0;
        return SF_OK;
    });
}

sf_status sf_integer_optimum(const sf_instance* inst, double time_limit_s,
                             sf_exact_result* out) {
    if (!inst || !out) return fail(SF_ERR_INVALID_ARGUMENT, "null argument");
    return guarded([&] {
        ExactResult r = integer_optimum(inst->impl, make_limits(time_limit_s, 0));
        out->value = r.value;
        out->found = r.found ? 1 : 0;
        out->optimal = r.optimal ? 1 : 0;
        out->nodes = r.nodes;
        return SF_OK;
    });
}

sf_status sf_export_lp(const sf_instance* inst, int kind, char** out) {
    if (!inst || !out) return fail(SF_ERR_INVALID_ARGUMENT, "null argument");
    if (!valid_kind(kind)) return fail(SF_ERR_INVALID_ARGUMENT, "kind out of range");
    return guarded([&] {
        Model model = build(inst->impl, to_kind(kind));
        *out = dup_string(export_lp(model.lp));
        return *out ? SF_OK : fail(SF_ERR_INTERNAL, "allocation failed");
    });
}

}  // extern "C"
