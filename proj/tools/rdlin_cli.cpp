/*
 * Copyright 2026 the rdlin authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

// Command-line frontend.  Reports go to standard output as single-line
// JSON; diagnostics and timings go to standard error.  Exit codes: 0 for
// success (including "no related differential" verdicts), 2 for invalid
// input, 3 when a constructed witness fails re-verification (a bug).

#include <CLI11.hpp>

#include <chrono>
#include <fstream>
#include <iostream>

#include "rdlin/io.hpp"

namespace {

using namespace rdlin;

constexpr int kExitOk = 0;
constexpr int kExitBadInput = 2;
constexpr int kExitVerifyBug = 3;

struct BadInput : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct VerifyBug : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct FieldOverride {
    int m = 0;            // 0 means unset
    std::string modulus;  // empty means unset

    void add_options(CLI::App* cmd) {
        cmd->add_option("--m", m, "Field degree; must match the input file");
        cmd->add_option("--modulus", modulus,
                        "Field modulus as 0x-hex; must match the input file");
    }

    void check(const Field& f, const std::string& path) const {
        if (m != 0 && m != f.degree())
            throw BadInput("--m " + std::to_string(m) + " does not match degree " +
                           std::to_string(f.degree()) + " in " + path);
        if (!modulus.empty() && parse_hex(modulus) != f.modulus())
            throw BadInput("--modulus " + modulus + " does not match " +
                           to_hex(f.modulus()) + " in " + path);
    }
};

ordered_json load_json(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw BadInput("cannot open " + path);
    return ordered_json::parse(in); // parse_error carries position diagnostics
}

Mat load_matrix(const std::string& path, const FieldOverride& fo) {
    Mat m = mat_of_json(load_json(path));
    fo.check(*m.f, path);
    return m;
}

void emit(const ordered_json& j) { std::cout << j.dump() << "\n"; }

void emit_file_or_stdout(const ordered_json& j, const std::string& out_path) {
    if (out_path.empty()) {
        emit(j);
        return;
    }
    std::ofstream out(out_path);
    if (!out) throw BadInput("cannot write " + out_path);
    out << j.dump() << "\n";
}

// Every positive verdict leaving the tool is re-checked from scratch.
void recheck(const Mat& m, const Witness& w) {
    if (!verify_witness(m, std::as_const(w)).ok)
        throw VerifyBug("constructed witness failed re-verification");
}

class Timer {
  public:
    ~Timer() {
        const auto dt = std::chrono::steady_clock::now() - start_;
        std::fprintf(stderr, "elapsed: %.3fs\n",
                     std::chrono::duration<double>(dt).count());
    }

  private:
    std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

Vec parse_elems(const FieldPtr& f, const std::vector<std::string>& words,
                const char* what) {
    if (words.empty()) throw BadInput(std::string(what) + " must not be empty");
    std::vector<Elem> e;
    e.reserve(words.size());
    for (const auto& w : words) {
        const std::uint32_t v = parse_hex(w);
        if (v >= static_cast<std::uint32_t>(f->size()))
            throw BadInput("element " + w + " out of range for degree " +
                           std::to_string(f->degree()));
        e.push_back(static_cast<Elem>(v));
    }
    return Vec{f, std::move(e)};
}

int run(int argc, char** argv) {
    CLI::App app{"Related-difference analysis of linear layers over F(2^m)"};
    app.require_subcommand(1);

    // analyze
    auto* cmd_analyze = app.add_subcommand("analyze", "Full report for a matrix file");
    std::string analyze_path;
    FieldOverride analyze_fo;
    cmd_analyze->add_option("file", analyze_path, "Matrix JSON file")->required();
    analyze_fo.add_options(cmd_analyze);

    // search
    auto* cmd_search = app.add_subcommand("search", "Brute-force witness search");
    std::string search_path;
    FieldOverride search_fo;
    bool search_full_flag = false, search_bounded_flag = false;
    cmd_search->add_option("file", search_path, "Matrix JSON file")->required();
    cmd_search->add_flag("--full", search_full_flag, "Scan all normalized inputs");
    cmd_search->add_flag("--bounded", search_bounded_flag,
                         "Weight-capped search (MDS matrices only)");
    search_fo.add_options(cmd_search);

    // construct
    auto* cmd_construct = app.add_subcommand("construct", "Emit a structured matrix");
    std::string shape, construct_out, l_hex;
    int construct_m = 0;
    std::string construct_modulus;
    std::vector<std::string> row_words, xs_words, ys_words, seed_words;
    cmd_construct
        ->add_option("shape", shape,
                     "One of circulant, left-circulant, cauchy, cauchy2, hadamard")
        ->required()
        ->check(CLI::IsMember(
            {"circulant", "left-circulant", "cauchy", "cauchy2", "hadamard"}));
    cmd_construct->add_option("--m", construct_m, "Field degree")->required();
    cmd_construct->add_option("--modulus", construct_modulus, "Field modulus as 0x-hex");
    cmd_construct->add_option("--row", row_words, "First row (hex)")->delimiter(',');
    cmd_construct->add_option("--xs", xs_words, "x coordinates (hex)")->delimiter(',');
    cmd_construct->add_option("--ys", ys_words, "y coordinates (hex)")->delimiter(',');
    cmd_construct->add_option("--l", l_hex, "Offset for cauchy2 (hex)");
    cmd_construct->add_option("--seed", seed_words, "Seed row (hex)")->delimiter(',');
    cmd_construct->add_option("-o,--out", construct_out, "Write to file instead of stdout");

    // decompose
    auto* cmd_decompose =
        app.add_subcommand("decompose", "Diagonal factorization M = D1*M1*D2");
    std::string decompose_path;
    FieldOverride decompose_fo;
    cmd_decompose->add_option("file", decompose_path, "Matrix JSON file")->required();
    decompose_fo.add_options(cmd_decompose);

    // witness-check
    auto* cmd_wcheck = app.add_subcommand("witness-check", "Verify a witness file");
    std::string wcheck_matrix, wcheck_witness;
    FieldOverride wcheck_fo;
    cmd_wcheck->add_option("matrix", wcheck_matrix, "Matrix JSON file")->required();
    cmd_wcheck->add_option("witness", wcheck_witness, "Witness JSON file")->required();
    wcheck_fo.add_options(cmd_wcheck);

    // enumerate3
    auto* cmd_enum = app.add_subcommand("enumerate3", "Census of 3x3 matrices");
    int enum_m = 0, enum_jobs = 0;
    std::string enum_modulus, enum_emit = "json";
    cmd_enum->add_option("--m", enum_m, "Field degree (3..8)")->required();
    cmd_enum->add_option("--modulus", enum_modulus, "Field modulus as 0x-hex");
    cmd_enum->add_option("--jobs", enum_jobs, "Worker count (0 = one per core)");
    cmd_enum->add_option("--emit", enum_emit, "Output format")
        ->check(CLI::IsMember({"json", "csv"}));

    // branch
    auto* cmd_branch = app.add_subcommand("branch", "Differential and linear branch numbers");
    std::string branch_path;
    FieldOverride branch_fo;
    cmd_branch->add_option("file", branch_path, "Matrix JSON file")->required();
    branch_fo.add_options(cmd_branch);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitBadInput;
    }

    if (*cmd_analyze) {
        Mat m = load_matrix(analyze_path, analyze_fo);
        Timer t;
        AnalysisReport rep = analyze(m);
        if (rep.witness) recheck(m, *rep.witness);
        emit(report_to_json(rep));
        return kExitOk;
    }

    if (*cmd_search) {
        if (search_full_flag == search_bounded_flag)
            throw BadInput("pass exactly one of --full or --bounded");
        Mat m = load_matrix(search_path, search_fo);
        Timer t;
        auto w = search_full_flag ? search_full(m) : search_bounded(m);
        if (w) {
            recheck(m, *w);
            emit(witness_to_json(*w));
        } else {
            emit(ordered_json("none"));
        }
        return kExitOk;
    }

    if (*cmd_construct) {
        if (construct_m < 2 || construct_m > 16)
            throw BadInput("--m must be between 2 and 16");
        auto f = construct_modulus.empty()
                     ? field_default(construct_m)
                     : field_new(construct_m,
                                 static_cast<Elem>(parse_hex(construct_modulus)));
        Mat m = [&] {
            if (shape == "circulant") return circulant(parse_elems(f, row_words, "--row"));
            if (shape == "left-circulant")
                return left_circulant(parse_elems(f, row_words, "--row"));
            if (shape == "cauchy")
                return cauchy(parse_elems(f, xs_words, "--xs"),
                              parse_elems(f, ys_words, "--ys"));
            if (shape == "cauchy2") {
                if (l_hex.empty()) throw BadInput("cauchy2 needs --l");
                const std::uint32_t l = parse_hex(l_hex);
                if (l == 0 || l >= static_cast<std::uint32_t>(f->size()))
                    throw BadInput("--l out of range");
                return cauchy_type2(parse_elems(f, xs_words, "--xs"),
                                    static_cast<Elem>(l));
            }
            return hadamard(parse_elems(f, seed_words, "--seed"));
        }();
        emit_file_or_stdout(mat_to_json(m), construct_out);
        return kExitOk;
    }

    if (*cmd_decompose) {
        Mat m = load_matrix(decompose_path, decompose_fo);
        emit(decomposition_to_json(decompose(m)));
        return kExitOk;
    }

    if (*cmd_wcheck) {
        Mat m = load_matrix(wcheck_matrix, wcheck_fo);
        Witness w = witness_of_json(load_json(wcheck_witness));
        emit(verify_to_json(verify_witness(m, std::as_const(w))));
        return kExitOk;
    }

    if (*cmd_enum) {
        Timer t;
        EnumStats st = enumerate3(
            enum_m,
            enum_modulus.empty() ? 0 : static_cast<Elem>(parse_hex(enum_modulus)),
            enum_jobs);
        std::fprintf(stderr, "census: %.3fs in the scan itself\n", st.elapsed_seconds);
        if (enum_emit == "csv")
            std::cout << enum_to_csv(st);
        else
            emit(enum_to_json(st));
        return kExitOk;
    }

    if (*cmd_branch) {
        Mat m = load_matrix(branch_path, branch_fo);
        Timer t;
        ordered_json j;
        j["branch_diff"] = branch_number_differential(m);
        j["branch_lin"] = branch_number_linear(m);
        emit(j);
        return kExitOk;
    }

    return kExitBadInput; // unreachable: a subcommand is required
}

} // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const VerifyBug& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return kExitVerifyBug;
    } catch (const rdlin::Error& e) {
        // A degenerate construction means a verified witness could not be
        // produced where one was promised; that is an internal failure.
        std::fprintf(stderr, "error: %s\n", e.what());
        return e.code == rdlin::Errc::ConstructionDegenerate ? kExitVerifyBug
                                                             : kExitBadInput;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return kExitBadInput;
    }
}
