// shibij: counting, enumeration and bijections for dominant regions of
// m-Shi arrangements of types A and C.

#include "shibij/bijection.hpp"
#include "shibij/catalan.hpp"
#include "shibij/enumerate.hpp"
#include "shibij/errors.hpp"
#include "shibij/json_io.hpp"
#include "shibij/lattice_paths.hpp"
#include "shibij/tableau.hpp"
#include "shibij/verify.hpp"

#include <CLI11.hpp>

#include <iostream>
#include <iterator>
#include <limits>
#include <optional>

namespace {

using namespace shibij;
namespace sj = shibij::json;
using nlohmann::json;

enum Exit : int { kOk = 0, kFailed = 1, kInvalid = 2, kDomain = 3, kResource = 4 };

struct Args {
    std::string type;
    std::int64_t n = 0;
    std::int64_t m = 0;
    std::optional<std::int64_t> index;
    std::optional<std::int64_t> k;
    std::string format = "json";
    bool verify = false;
    unsigned jobs = 0;
    std::optional<std::uint64_t> limit;
    std::string input;
    std::string action;
    std::string suite;
};

json read_input(const std::string& text) {
    if (text.empty() || text == "-") {
        std::string all{std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
        return sj::parse(all);
    }
    return sj::parse(text);
}

void require_nm(const Args& a) {
    if (a.n < 1) {
        throw DomainError("--n must be at least 1");
    }
    if (a.m < 1) {
        throw DomainError("--m must be at least 1");
    }
}

std::int64_t require_m(const Args& a) {
    if (a.m < 1) {
        throw DomainError("--m must be at least 1");
    }
    return a.m;
}

char type_letter(const std::string& type) {
    if (type == "A" || type == "a") return 'A';
    if (type == "C" || type == "c") return 'C';
    if (type == "paths" || type == "L") return 'L';
    if (type == "dyck" || type == "D") return 'D';
    throw DomainError("unknown type \"" + type + "\" (expected A, C, paths or dyck)");
}

bool ascii(const Args& a) {
    if (a.format != "json" && a.format != "ascii") {
        throw DomainError("--format must be json or ascii");
    }
    return a.format == "ascii";
}

void emit(const json& j) {
    std::cout << j.dump() << '\n';
}

void emit_region(const RegionTableau& r, const Args& a) {
    if (ascii(a)) {
        std::cout << render_ascii(r.cells());
    } else {
        emit(sj::to_json(r));
    }
}

void emit_alcove(const AlcoveTableau& t, const Args& a) {
    if (ascii(a)) {
        std::cout << render_ascii(t.cells());
    } else {
        emit(sj::to_json(t));
    }
}

int run_count(const Args& a) {
    const auto type = type_letter(a.type);
    require_nm(a);
    BigInt value;
    if (type == 'A') {
        value = catalan_A(a.n, a.m);
    } else if (type == 'C') {
        value = catalan_C(a.n, a.m);
    } else {
        throw DomainError("count takes type A or C");
    }
    std::cout << value.str() << '\n';
    if (a.verify) {
        EnumerationOptions opts;
        opts.jobs = a.jobs;
        const auto found = type == 'A' ? enumerate_regions_A(a.n, a.m, opts).size()
                                       : enumerate_regions_C(a.n, a.m, opts).size();
        if (BigInt(found) != value) {
            std::cerr << "enumeration found " << found << " regions\n";
            return kFailed;
        }
        std::cerr << "verified by enumeration\n";
    }
    return kOk;
}

int run_enumerate(const Args& a) {
    const auto type = type_letter(a.type);
    require_nm(a);
    EnumerationOptions opts;
    if (a.limit) {
        opts.ceiling = std::numeric_limits<std::uint64_t>::max();
    }
    const auto cap = a.limit.value_or(std::numeric_limits<std::uint64_t>::max());
    std::uint64_t seen = 0;
    const bool pretty = ascii(a);
    if (cap == 0) {
        return kOk;
    }
    auto region = [&](const Abacus& w) {
        if (pretty) {
            std::cout << to_string(w) << '\n'
                      << render_ascii(region_from_alcove(tableau_from_abacus(w), a.m).cells()) << '\n';
        } else {
            emit(sj::to_json(w));
        }
        return ++seen < cap;
    };
    auto path = [&](const LatticePath& p) {
        if (pretty) {
            std::cout << to_word(p) << '\n';
        } else {
            emit(sj::to_json(p));
        }
        return ++seen < cap;
    };
    switch (type) {
        case 'A': for_each_region_A(a.n, a.m, region, opts); break;
        case 'C': for_each_region_C(a.n, a.m, region, opts); break;
        case 'L': for_each_lattice_path(a.n, a.m, path, opts); break;
        default: for_each_dyck_path(a.n, a.m, path, opts); break;
    }
    return kOk;
}

int run_map_bj1(const Args& a) {
    const auto m = require_m(a);
    const auto in = read_input(a.input);
    Abacus w = Abacus::identity(1);
    std::optional<std::int64_t> index = a.index;
    if (in.is_object() && in.contains("w")) {
        w = sj::abacus_from_json(in.at("w"));
        if (!index && in.contains("i")) {
            if (!in.at("i").is_number_integer()) {
                throw InvariantError("\"i\" must be an integer");
            }
            index = in.at("i").get<std::int64_t>();
        }
    } else {
        w = sj::abacus_from_json(in);
    }
    if (!index) {
        throw InvariantError("map-bj1 needs an index (--index or \"i\")");
    }
    const auto wbar = bj1_forward(w, *index, m);
    if (ascii(a)) {
        std::cout << render_ascii(region_from_alcove(tableau_from_abacus(wbar), m).cells());
    } else {
        emit(sj::to_json(wbar));
    }
    return kOk;
}

int run_unmap_bj1(const Args& a) {
    const auto m = require_m(a);
    const auto pre = bj1_inverse(sj::abacus_from_json(read_input(a.input)), m);
    emit({{"w", sj::entries_json(pre.w)}, {"i", pre.i}});
    return kOk;
}

int run_map_bj2(const Args& a) {
    const auto p = sj::path_from_json(read_input(a.input), a.m);
    const auto image = bj2_forward(p);
    if (ascii(a)) {
        std::cout << to_word(image.dyck.path()) << ' ' << image.k << '\n';
    } else {
        emit({{"dyck", image.dyck.steps()}, {"k", image.k}});
    }
    return kOk;
}

int run_unmap_bj2(const Args& a) {
    const auto in = read_input(a.input);
    // Either {"dyck": path, "k": k} or a bare path with --k.
    const bool wrapped = in.is_object() && in.contains("dyck");
    const json& path = wrapped ? in.at("dyck") : in;
    auto m = a.m;
    if (wrapped && in.contains("m")) {
        m = in.at("m").get<std::int64_t>();
    }
    std::int64_t k = 0;
    if (a.k) {
        k = *a.k;
    } else if (wrapped && in.contains("k") && in.at("k").is_number_integer()) {
        k = in.at("k").get<std::int64_t>();
    } else {
        throw InvariantError("unmap-bj2 needs a shift (--k or \"k\")");
    }
    const DyckPath d(sj::path_from_json(path, m));
    const auto p = bj2_inverse(d, k);
    if (ascii(a)) {
        std::cout << to_word(p) << '\n';
    } else {
        emit(sj::to_json(p));
    }
    return kOk;
}

int run_admissible(const Args& a) {
    const auto m = require_m(a);
    emit(admissible_set(sj::abacus_from_json(read_input(a.input)), m).ks);
    return kOk;
}

/// Rows of a staircase without the Shi conditions, for rendering.
std::vector<std::vector<std::int64_t>> staircase_rows(const json& j) {
    if (!j.is_array()) {
        throw InvariantError("\"rows\" must be an array of arrays");
    }
    std::vector<std::vector<std::int64_t>> rows;
    for (const auto& row : j) {
        if (!row.is_array()) {
            throw InvariantError("tableau rows must be arrays of integers");
        }
        auto& out = rows.emplace_back();
        for (const auto& x : row) {
            if (!x.is_number_integer()) {
                throw InvariantError("tableau entries must be integers");
            }
            out.push_back(x.get<std::int64_t>());
        }
    }
    return rows;
}

int run_tableau(const Args& a) {
    const auto in = read_input(a.input);
    if (a.action == "from-abacus") {
        emit_alcove(tableau_from_abacus(sj::abacus_from_json(in)), a);
    } else if (a.action == "to-abacus") {
        const auto w = abacus_from_tableau(sj::alcove_tableau_from_json(in));
        if (ascii(a)) {
            std::cout << to_string(w) << '\n';
        } else {
            emit(sj::to_json(w));
        }
    } else if (a.action == "region") {
        const auto m = require_m(a);
        const bool tableau = in.is_object() ? in.contains("rows") : false;
        const auto t = tableau ? sj::alcove_tableau_from_json(in) : tableau_from_abacus(sj::abacus_from_json(in));
        emit_region(region_from_alcove(t, m), a);
    } else if (a.action == "minimal-alcove") {
        emit_alcove(alcove_from_region(sj::region_tableau_from_json(in, a.m)), a);
    } else if (a.action == "render") {
        if (in.is_string() || (in.is_object() && in.contains("entries"))) {
            const auto t = tableau_from_abacus(sj::abacus_from_json(in));
            std::cout << render_ascii(a.m > 0 ? region_from_alcove(t, a.m).cells() : t.cells());
        } else {
            std::cout << render_ascii(Staircase::from_rows(staircase_rows(in.is_object() ? in.at("rows") : in)));
        }
    } else {
        throw DomainError("unknown tableau action \"" + a.action + "\"");
    }
    return kOk;
}

int run_verify(const Args& a) {
    std::vector<std::string> suites;
    if (a.suite == "all") {
        suites = suite_names();
    } else {
        suites.push_back(a.suite);
    }
    VerifyOptions opts;
    opts.jobs = a.jobs;
    bool ok = true;
    for (const auto& name : suites) {
        const auto report = run_suite(name, opts);
        std::cout << format_report(report) << std::flush;
        ok = ok && report.passed();
    }
    return ok ? kOk : kFailed;
}

void add_format_options(CLI::App* cmd, Args& a) {
    cmd->add_option("--format", a.format, "json or ascii");
    cmd->add_flag_callback("--ascii", [&a] { a.format = "ascii"; }, "same as --format ascii");
}

void add_shape_options(CLI::App* cmd, Args& a, const char* types) {
    cmd->add_option("--type", a.type, types);
    cmd->add_option("--n", a.n, "rank parameter n");
    cmd->add_option("--m", a.m, "Shi parameter m");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Dominant regions of m-Shi arrangements of types A and C"};
    app.require_subcommand(1);
    Args a;

    auto* count = app.add_subcommand("count", "number of dominant regions");
    add_shape_options(count, a, "A or C");
    count->add_option("pos_type", a.type, "A or C");
    count->add_option("pos_n", a.n, "n");
    count->add_option("pos_m", a.m, "m");
    count->add_flag("--verify", a.verify, "cross-check by enumeration");
    count->add_option("--jobs", a.jobs, "worker threads");

    auto* enumerate = app.add_subcommand("enumerate", "stream regions or paths as JSON lines");
    add_shape_options(enumerate, a, "A, C, paths or dyck");
    enumerate->add_option("pos_type", a.type, "A, C, paths or dyck");
    enumerate->add_option("pos_n", a.n, "n");
    enumerate->add_option("pos_m", a.m, "m");
    enumerate->add_option("--limit", a.limit, "stop after this many objects");
    add_format_options(enumerate, a);

    auto* map_bj1 = app.add_subcommand("map-bj1", "type A abacus and index to a type C abacus");
    auto* unmap_bj1 = app.add_subcommand("unmap-bj1", "type C abacus to a type A abacus and index");
    auto* map_bj2 = app.add_subcommand("map-bj2", "rectangle path to a Dyck path and shift");
    auto* unmap_bj2 = app.add_subcommand("unmap-bj2", "Dyck path and shift to a rectangle path");
    auto* admissible = app.add_subcommand("admissible", "admissible shifts of an m-minimal abacus");
    for (auto* cmd : {map_bj1, unmap_bj1, map_bj2, unmap_bj2, admissible}) {
        cmd->add_option("--m", a.m, "Shi parameter m");
        add_format_options(cmd, a);
        cmd->add_option("input", a.input, "JSON input; reads stdin when absent or -");
    }
    map_bj1->add_option("--index", a.index, "index i in 1..mn+1");
    unmap_bj2->add_option("--k", a.k, "shift k in 0..mn");

    auto* tableau = app.add_subcommand("tableau", "tableau conversions");
    tableau->add_option("action", a.action, "from-abacus, to-abacus, region, minimal-alcove or render")
        ->required()
        ->check(CLI::IsMember({"from-abacus", "to-abacus", "region", "minimal-alcove", "render"}));
    tableau->add_option("input", a.input, "JSON input; reads stdin when absent or -");
    tableau->add_option("--m", a.m, "Shi parameter m");
    add_format_options(tableau, a);

    auto* verify = app.add_subcommand("verify", "run property suites");
    std::vector<std::string> choices = suite_names();
    choices.push_back("all");
    verify->add_option("suite", a.suite, "suite name or all")->required()->check(CLI::IsMember(choices));
    verify->add_option("--jobs", a.jobs, "worker threads (default: all cores)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kInvalid;
    }

    try {
        if (*count) return run_count(a);
        if (*enumerate) return run_enumerate(a);
        if (*map_bj1) return run_map_bj1(a);
        if (*unmap_bj1) return run_unmap_bj1(a);
        if (*map_bj2) return run_map_bj2(a);
        if (*unmap_bj2) return run_unmap_bj2(a);
        if (*admissible) return run_admissible(a);
        if (*tableau) return run_tableau(a);
        if (*verify) return run_verify(a);
    } catch (const InvariantError& e) {
        std::cerr << "invalid input: " << e.what() << '\n';
        return kInvalid;
    } catch (const nlohmann::json::exception& e) {
        std::cerr << "invalid input: " << e.what() << '\n';
        return kInvalid;
    } catch (const DomainError& e) {
        std::cerr << "rejected: " << e.what() << '\n';
        return kDomain;
    } catch (const std::overflow_error& e) {
        std::cerr << "rejected: " << e.what() << '\n';
        return kDomain;
    } catch (const ResourceLimitError& e) {
        std::cerr << "resource limit: " << e.what() << '\n';
        return kResource;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << '\n';
        return kFailed;
    }
    return kFailed;
}
