#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "gkmod/analysis.hpp"
#include "gkmod/constructions.hpp"
#include "gkmod/io.hpp"
#include "gkmod/rational.hpp"
#include "gkmod/representation.hpp"

namespace {

using gkmod::Orientation;
using gkmod::Representation;
using gkmod::VertexAddress;

struct BuildSpec {
    int n = 3;
    bool sinks_even = true;
    std::string case_name;  // empty: dispatch on r and b
    std::optional<int> r;
    std::optional<int> b;
    std::optional<std::string> path;
    std::string lambda = "2";
    std::optional<std::string> seed_file;
};

void add_build_flags(CLI::App* sub, BuildSpec& spec) {
    sub->add_option("--n", spec.n, "tree valence")->check(CLI::Range(3, 64));
    sub->add_option("--sinks-even", spec.sinks_even,
                    "whether even-depth vertices are the sinks (default true)");
    sub->add_option("--case", spec.case_name, "construction to use")
        ->check(CLI::IsMember({"I", "II", "III", "family"}));
    sub->add_option("--r", spec.r, "radius of the seed module");
    sub->add_option("--b", spec.b, "distance between the end centers");
    sub->add_option("--path", spec.path,
                    "explicit center path: comma-separated addresses, empty token for the root");
    sub->add_option("--lambda", spec.lambda, "gluing scalar for the family (default 2)");
    sub->add_option("--seed-file", spec.seed_file, "read the module from a JSON file instead")
        ->check(CLI::ExistingFile);
}

std::vector<VertexAddress> parse_path_list(const std::string& text) {
    std::vector<VertexAddress> out;
    std::size_t pos = 0;
    while (true) {
        const std::size_t comma = text.find(',', pos);
        const std::string tok =
            text.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
        out.push_back(VertexAddress::parse(tok));
        if (comma == std::string::npos) break;
        pos = comma + 1;
    }
    return out;
}

std::string read_file(const std::string& name) {
    std::ifstream in(name, std::ios::binary);
    if (!in) throw std::invalid_argument("cannot open '" + name + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

Representation build_module(const BuildSpec& spec) {
    if (spec.seed_file) {
        if (!spec.case_name.empty() || spec.r || spec.b || spec.path)
            throw std::invalid_argument("--seed-file excludes the construction flags");
        return gkmod::from_json(read_file(*spec.seed_file));
    }

    const Orientation o{spec.n, spec.sinks_even};
    std::optional<std::vector<VertexAddress>> path;
    if (spec.path) path = parse_path_list(*spec.path);
    std::optional<int> b = spec.b;
    if (path) {
        const int blen = static_cast<int>(path->size()) - 1;
        if (b && *b != blen)
            throw std::invalid_argument("--b contradicts the length of --path");
        b = blen;
    }

    if (spec.case_name == "family") {
        if (!b) throw std::invalid_argument("the family needs --b or --path");
        if (spec.r && *spec.r != *b + 2)
            throw std::invalid_argument("the family has radius b + 2; drop --r or pass b + 2");
        if (!path) path = gkmod::canonical_center_path(o, *b + 2, *b);
        return gkmod::family_module(o, *path, gkmod::parse_scalar(spec.lambda));
    }
    if (spec.case_name == "III") {
        if (spec.r && *spec.r != 1)
            throw std::invalid_argument("case III has radius 1");
        if (b && *b != 0) throw std::invalid_argument("case III has b = 0");
        const VertexAddress p =
            path ? path->front() : gkmod::canonical_center_path(o, 1, 0).front();
        return gkmod::case_iii(o, p);
    }

    if (!spec.r) throw std::invalid_argument("--r is required");
    const int r = *spec.r;
    if (spec.case_name == "I") {
        if (b && *b != r) throw std::invalid_argument("case I needs b = r");
        if (!path) path = gkmod::canonical_center_path(o, r, r);
        return gkmod::case_i(o, r, *path);
    }
    if (spec.case_name == "II") {
        if (!b) throw std::invalid_argument("case II needs --b or --path");
        if (!path) path = gkmod::canonical_center_path(o, r, *b);
        return gkmod::case_ii(o, r, *path);
    }
    if (!b) throw std::invalid_argument("--b or --path is required");
    if (!path) path = gkmod::canonical_center_path(o, r, *b);
    return gkmod::seed_module(o, r, *path);
}

void write_out(const std::optional<std::string>& out_file, const std::string& text) {
    if (!out_file) {
        std::cout << text;
        return;
    }
    std::ofstream out(*out_file, std::ios::binary);
    out << text;
    if (!out) throw std::runtime_error("cannot write '" + *out_file + "'");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"finite tree modules: construction, shift orbits, verification"};
    app.require_subcommand(1);

    BuildSpec build_spec;
    std::optional<std::string> out_file;

    CLI::App* construct = app.add_subcommand("construct", "build a module and print its JSON");
    add_build_flags(construct, build_spec);
    construct->add_option("--out", out_file, "write to a file instead of stdout");

    BuildSpec orbit_spec;
    std::optional<int> win_from, win_to;
    std::string format = "ascii";
    CLI::App* orbit = app.add_subcommand("orbit", "walk a shift-orbit window and report it");
    add_build_flags(orbit, orbit_spec);
    orbit->add_option("--from", win_from, "first orbit index (default -2)");
    orbit->add_option("--to", win_to, "last orbit index (default b + 3)");
    orbit->add_option("--format", format, "ascii, csv or json")
        ->check(CLI::IsMember({"ascii", "csv", "json"}));
    orbit->add_option("--out", out_file, "write to a file instead of stdout");

    BuildSpec verify_spec;
    std::optional<int> ver_from, ver_to;
    CLI::App* verify = app.add_subcommand("verify", "check an orbit window against the theory");
    add_build_flags(verify, verify_spec);
    verify->add_option("--from", ver_from, "first orbit index (default -2)");
    verify->add_option("--to", ver_to, "last orbit index (default b + 3)");
    verify->add_option("--out", out_file, "write to a file instead of stdout");

    int rb_b = 0, rb_lmax = 6;
    int rb_from = -5, rb_to = 7;
    std::string rb_variant = "corrected";
    CLI::App* rbtable = app.add_subcommand("rb-table", "print the radius-offset grids");
    rbtable->add_option("--b", rb_b, "center distance (default 0)");
    rbtable->add_option("--from", rb_from, "first orbit index (default -5)");
    rbtable->add_option("--to", rb_to, "last orbit index (default 7)");
    rbtable->add_option("--lmax", rb_lmax, "largest coray position (default 6)");
    rbtable->add_option("--variant", rb_variant, "printed or corrected")
        ->check(CLI::IsMember({"printed", "corrected"}));
    rbtable->add_option("--out", out_file, "write to a file instead of stdout");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << e.what() << "\n";
        return 2;
    }

    try {
        if (app.got_subcommand(construct)) {
            write_out(out_file, gkmod::to_json(build_module(build_spec)));
        } else if (app.got_subcommand(orbit)) {
            const Representation m = build_module(orbit_spec);
            const gkmod::OrbitSignature sig = gkmod::orbit_signature(m);
            const int lo = win_from.value_or(-2);
            const int hi = win_to.value_or(sig.b + 3);
            const gkmod::OrbitReport report = gkmod::orbit_profile(m, lo, hi);
            if (format == "csv")
                write_out(out_file, gkmod::orbit_csv(report));
            else if (format == "json")
                write_out(out_file, gkmod::report_json(report));
            else
                write_out(out_file, gkmod::orbit_table(report));
        } else if (app.got_subcommand(verify)) {
            const Representation m = build_module(verify_spec);
            const gkmod::OrbitSignature sig = gkmod::orbit_signature(m);
            const int lo = ver_from.value_or(-2);
            const int hi = ver_to.value_or(sig.b + 3);
            const gkmod::OrbitReport report = gkmod::orbit_profile(m, lo, hi);
            const gkmod::VerifyResult res = gkmod::verify_orbit(report.sig, report.steps);
            nlohmann::ordered_json j;
            j["pass"] = res.pass;
            j["failures"] = res.failures;
            write_out(out_file, j.dump(2) + "\n");
            if (!res.pass) return 1;
        } else if (app.got_subcommand(rbtable)) {
            const gkmod::RbVariant variant = rb_variant == "printed"
                                                 ? gkmod::RbVariant::Printed
                                                 : gkmod::RbVariant::Corrected;
            write_out(out_file, gkmod::rb_grid(rb_b, rb_from, rb_to, rb_lmax, variant));
        }
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
