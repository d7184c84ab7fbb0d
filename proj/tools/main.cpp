// shalika: double cosets of (Shalika subgroup, maximal parabolic) in GL_2n(F_p).
//
// Exit codes: 0 success, 2 usage / bad input, 3 domain error (singular
// matrix), 4 internal verification failure, 5 assertion failure in a
// verification run.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "shalika/errors.hpp"
#include "shalika/json_io.hpp"

using nlohmann::json;
using namespace shalika;

namespace {

Matrix load_matrix(const std::string& path, std::uint32_t expect_p) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open " + path);
    json j;
    try {
        in >> j;
    } catch (const json::exception& e) {
        throw std::invalid_argument(path + ": " + e.what());
    }
    Matrix m = matrix_from_json(j);
    if (expect_p != 0 && m.field().modulus() != expect_p)
        throw std::invalid_argument(path + ": matrix is over F_" +
                                    std::to_string(m.field().modulus()) +
                                    ", expected F_" + std::to_string(expect_p));
    return m;
}

int run_reps(int n, int r, std::uint32_t p, const std::string& format) {
    const PrimeField f(p);
    const auto labels = kl_bounds(n, r);
    if (format == "json") {
        json reps = json::array();
        for (const auto& label : labels)
            reps.push_back(json{{"k", label.k},
                                {"l", label.l},
                                {"matrix", to_json(representative(f, label))}});
        std::cout << json{{"n", n},
                          {"r", r},
                          {"p", p},
                          {"count", labels.size()},
                          {"representatives", std::move(reps)}}
                         .dump(2)
                  << "\n";
    } else {
        for (const auto& label : labels)
            std::cout << "w[k=" << label.k << ", l=" << label.l << "]\n"
                      << representative(f, label) << "\n";
        std::cout << labels.size() << " double coset(s)\n";
    }
    return 0;
}

int run_count(int n, int r) {
    std::cout << coset_count(n, r) << "\n";
    return 0;
}

int run_classify(const std::string& file, int n, int r, std::uint32_t p) {
    const Matrix g = load_matrix(file, p);
    const CosetLabel label = classify(g, n, r);
    std::cout << to_json(label).dump() << "\n";
    return 0;
}

int run_decompose(const std::string& file, int n, int r, std::uint32_t p) {
    const Matrix g = load_matrix(file, p);
    const Decomposition d = decompose(g, n, r);
    std::cout << to_json(d).dump(2) << "\n";
    return 0;
}

int run_verify(int n, std::uint32_t p, int r, bool has_r, bool expensive) {
    std::vector<int> rs;
    if (has_r)
        rs.push_back(r);
    else
        for (int i = 1; i < 2 * n; ++i) rs.push_back(i);

    bool all_passed = true;
    json reports = json::array();
    for (int ri : rs) {
        const auto report = oracle::certify(n, p, ri, expensive);
        all_passed = all_passed && report.passed();
        reports.push_back(to_json(report));
    }
    if (has_r)
        std::cout << reports.front().dump(2) << "\n";
    else
        std::cout << json{{"reports", std::move(reports)}}.dump(2) << "\n";
    return all_passed ? 0 : 5;
}

int run_sym_cosets(int n, int r, bool brute) {
    const auto transversal = delta_orbit_transversal(n, r);
    json entries = json::array();
    for (const auto& [label, wp] : transversal)
        entries.push_back(
            json{{"k", label.k}, {"l", label.l}, {"images", to_json(wp)}});
    json out{{"n", n},
             {"r", r},
             {"count", transversal.size()},
             {"transversal", std::move(entries)}};

    bool agrees = true;
    if (brute) {
        const auto classes = brute_force_sym_cosets(n, r);
        json sizes = json::array();
        for (const auto& cls : classes) sizes.push_back(cls.size());
        agrees = classes.size() == transversal.size();
        // every brute class must hold exactly one transversal member
        for (const auto& cls : classes) {
            int hits = 0;
            for (const auto& member : cls)
                for (const auto& [label, wp] : transversal)
                    if (member == wp) ++hits;
            if (hits != 1) agrees = false;
        }
        out["brute"] = json{{"classes", classes.size()},
                            {"sizes", std::move(sizes)},
                            {"agrees", agrees}};
    }
    std::cout << out.dump(2) << "\n";
    return agrees ? 0 : 5;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact (Shalika, maximal parabolic) double cosets of GL_2n "
                 "over prime fields"};
    app.require_subcommand(1);

    int n = 0, r = 0;
    std::uint32_t p = 2;
    std::string file, format = "pretty";
    bool expensive = false, brute = false;

    auto* reps = app.add_subcommand("reps", "List the representatives w_{k,l}");
    reps->add_option("--n", n, "Half rank: the group is GL_2n")->required();
    reps->add_option("--r", r, "Parabolic type (r, 2n-r)")->required();
    reps->add_option("--p", p, "Field modulus (any prime works; default 2)");
    reps->add_option("--format", format, "json or pretty")
        ->check(CLI::IsMember({"json", "pretty"}));

    auto* count = app.add_subcommand("count", "Print the number of double cosets");
    count->add_option("--n", n)->required();
    count->add_option("--r", r)->required();

    auto* classify_cmd =
        app.add_subcommand("classify", "Label the double coset of a matrix");
    classify_cmd->add_option("file", file, "Matrix JSON file")->required();
    classify_cmd->add_option("--n", n)->required();
    classify_cmd->add_option("--r", r)->required();
    classify_cmd->add_option("--p", p, "Cross-check the file's modulus");

    auto* decompose_cmd =
        app.add_subcommand("decompose", "Factor a matrix as s * w_{k,l} * p");
    decompose_cmd->add_option("file", file, "Matrix JSON file")->required();
    decompose_cmd->add_option("--n", n)->required();
    decompose_cmd->add_option("--r", r)->required();
    decompose_cmd->add_option("--p", p, "Cross-check the file's modulus");

    auto* verify = app.add_subcommand(
        "verify", "Certify the double coset theory against brute force");
    verify->add_option("--n", n)->required();
    verify->add_option("--p", p, "Field modulus")->required();
    auto* ropt = verify->add_option("--r", r, "Single r (default: all 1..2n-1)");
    verify->add_flag("--expensive", expensive, "Allow the minutes-scale GL_4(F_3) run");

    auto* sym = app.add_subcommand(
        "sym-cosets", "Bruhat transversal of Delta S_n \\ S_2n / S_r x S_2n-r");
    sym->add_option("--n", n)->required();
    sym->add_option("--r", r)->required();
    sym->add_flag("--brute", brute, "Cross-check against exhaustive closure");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (app.got_subcommand(reps)) return run_reps(n, r, p, format);
        if (app.got_subcommand(count)) return run_count(n, r);
        if (app.got_subcommand(classify_cmd)) {
            std::uint32_t expect = classify_cmd->count("--p") ? p : 0;
            return run_classify(file, n, r, expect);
        }
        if (app.got_subcommand(decompose_cmd)) {
            std::uint32_t expect = decompose_cmd->count("--p") ? p : 0;
            return run_decompose(file, n, r, expect);
        }
        if (app.got_subcommand(verify))
            return run_verify(n, p, r, !ropt->empty(), expensive);
        if (app.got_subcommand(sym)) return run_sym_cosets(n, r, brute);
    } catch (const singular_matrix_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const verification_error& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 4;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    }
    return 2;
}
