#include <CLI11.hpp>
#include <json.hpp>

#include <iostream>
#include <string>

#include "qtrace/chromatic.hpp"
#include "qtrace/traces.hpp"
#include "qtrace/verify.hpp"

using namespace qtrace;

namespace {

void emit(const nlohmann::json& j) { std::cout << j.dump(2) << "\n"; }

// Accepts "t:231" / "T:231" (natural basis element) and "ctilde:231"
// (Kazhdan-Lusztig basis element).
HeckeElement parse_at(const std::string& token, int n, const KLTable& kl) {
    const auto colon = token.find(':');
    if (colon == std::string::npos)
        throw input_error("--at expects t:<perm> or ctilde:<perm>, got '" + token + "'");
    std::string kind = token.substr(0, colon);
    for (char& c : kind) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    const Permutation w = Permutation::parse(token.substr(colon + 1));
    if (w.n() != n)
        throw input_error("--at permutation " + w.to_string() + " is not in S_" +
                          std::to_string(n));
    if (kind == "t") return HeckeElement::basis(n, w);
    if (kind == "ctilde") return kl.c_tilde(w);
    throw input_error("unknown basis prefix '" + kind + "' in --at (use t: or ctilde:)");
}

Permutation parse_perm_flag(const std::string& text, int n_flag, const char* what) {
    const Permutation w = Permutation::parse(text);
    if (n_flag > 0 && w.n() != n_flag)
        throw input_error(std::string(what) + " " + w.to_string() + " is not in S_" +
                          std::to_string(n_flag));
    return w;
}

int cmd_klpoly(int n_flag, const std::string& u_text, const std::string& w_text,
               bool json) {
    const Permutation u = parse_perm_flag(u_text, n_flag, "--u");
    const Permutation w = parse_perm_flag(w_text, n_flag, "--w");
    if (u.n() != w.n())
        throw input_error("--u and --w live in different symmetric groups");
    KLTable kl(u.n());
    const HalfLaurent p = kl.kl_poly(u, w);
    const HalfLaurent r = kl.r_poly(u, w);
    if (json) {
        nlohmann::json j;
        j["n"] = u.n();
        j["u"] = u.to_string();
        j["w"] = w.to_string();
        j["P"] = p.to_string();
        j["R"] = r.to_string();
        emit(j);
    } else {
        std::cout << "P[" << u.to_string() << "," << w.to_string() << "] = "
                  << p.to_string() << "\n";
        std::cout << "R[" << u.to_string() << "," << w.to_string() << "] = "
                  << r.to_string() << "\n";
    }
    return 0;
}

int cmd_qnormalize(int n, const std::string& word_text, bool json) {
    const QMonomial word = parse_qword(word_text, n);
    const QElement nf = normalize(n, word);
    if (json) {
        nlohmann::json j;
        j["n"] = n;
        j["word"] = qmonomial_to_string(word);
        j["normal_form"] = nf.to_string();
        emit(j);
    } else {
        std::cout << nf.to_string() << "\n";
    }
    return 0;
}

int cmd_trace(int n, const std::string& family, const std::string& lambda_text,
              const std::string& at_token, bool json) {
    TraceContext ctx(n);
    const Partition la = Partition::parse(lambda_text);
    const HeckeElement at = parse_at(at_token, n, ctx.kl());
    const RatFunc value = ctx.family(family, la).eval(at);
    if (json) {
        nlohmann::json j;
        j["n"] = n;
        j["family"] = family;
        j["lambda"] = la.to_string();
        j["at"] = at_token;
        j["value"] = value.to_string();
        emit(j);
    } else {
        std::cout << value.to_string() << "\n";
    }
    return 0;
}

int cmd_coloring(const std::string& w_text, const std::string& basis_tag, bool json,
                 bool llt) {
    const Permutation w = Permutation::parse(w_text);
    const Basis target = parse_basis(basis_tag);
    const IndifferenceGraph g = graph_from_permutation(w);
    const SymFunc f = llt ? llt_poly(g, w.n()) : chromatic_qsym(g, w.n());
    const SymFunc in_basis = change_basis(f, target);
    if (json) {
        nlohmann::json j;
        j["w"] = w.to_string();
        j["function"] = llt ? "llt" : "chromatic";
        j["expansion"] = in_basis.to_json();
        emit(j);
    } else {
        std::cout << in_basis.to_string() << "\n";
    }
    return 0;
}

int cmd_immanant(int n, const std::string& family, const std::string& lambda_text,
                 bool json) {
    TraceContext ctx(n);
    const Partition la = Partition::parse(lambda_text);
    const Immanant imm = trace_immanant(ctx.family(family, la));
    if (json) {
        nlohmann::json j;
        j["n"] = n;
        j["family"] = family;
        j["lambda"] = la.to_string();
        j["elem"] = imm.elem.to_string();
        j["den"] = imm.den.to_string();
        emit(j);
    } else {
        std::cout << imm.elem.to_string() << "\n";
        if (!imm.den.is_one())
            std::cout << "denominator: " << imm.den.to_string() << "\n";
    }
    return 0;
}

int cmd_verify(const std::string& suite, int n, bool json) {
    const auto reports = run_verification(suite, n);
    bool all_pass = true;
    if (json) {
        nlohmann::json arr = nlohmann::json::array();
        for (const auto& r : reports) {
            arr.push_back(r.to_json());
            all_pass = all_pass && r.pass;
        }
        emit(arr);
    } else {
        for (const auto& r : reports) {
            std::cout << r.to_line() << "\n";
            all_pass = all_pass && r.pass;
        }
    }
    return all_pass ? 0 : 1;
}

int run(int argc, char** argv) {
    CLI::App app{"exact Hecke-algebra trace kernel: Kazhdan-Lusztig polynomials, "
                 "induced and plethystic traces, quantum-matrix immanants, chromatic "
                 "and LLT coloring sums, and the identity verification suites"};
    app.require_subcommand(1);

    // klpoly
    auto* klpoly = app.add_subcommand("klpoly", "Kazhdan-Lusztig P and R polynomials");
    int kl_n = 0;
    std::string kl_u, kl_w;
    bool kl_json = false;
    klpoly->add_option("--n", kl_n, "rank (inferred from --u/--w when omitted)");
    klpoly->add_option("--u", kl_u, "lower permutation, one-line")->required();
    klpoly->add_option("--w", kl_w, "upper permutation, one-line")->required();
    klpoly->add_flag("--json", kl_json, "machine-readable output");

    // qnormalize
    auto* qnorm = app.add_subcommand("qnormalize", "straighten a quantum-matrix word");
    int qn_n = 0;
    std::string qn_word;
    bool qn_json = false;
    qnorm->add_option("--n", qn_n, "matrix size")->required()->check(CLI::PositiveNumber);
    qnorm->add_option("--word", qn_word, "letters \"r,c;r,c;...\"")->required();
    qnorm->add_flag("--json", qn_json, "machine-readable output");

    // trace
    auto* trace = app.add_subcommand("trace", "evaluate an induced trace");
    int tr_n = 0;
    std::string tr_family, tr_lambda, tr_at;
    bool tr_json = false;
    trace->add_option("--n", tr_n, "rank")->required()->check(CLI::PositiveNumber);
    trace->add_option("--family", tr_family,
                      "eps|eta|eps_llt|eta_llt|psi|chi|phi|gamma|psi_llt")
        ->required();
    trace->add_option("--lambda", tr_lambda, "partition of n, e.g. 2,2")->required();
    trace->add_option("--at", tr_at, "t:<perm> or ctilde:<perm>")->required();
    trace->add_flag("--json", tr_json, "machine-readable output");

    // llt / chromatic
    auto* llt = app.add_subcommand("llt", "unicellular LLT coloring sum of a graph G(w)");
    std::string llt_w, llt_basis = "m";
    bool llt_json = false;
    llt->add_option("--w", llt_w, "312-avoiding permutation, one-line")->required();
    llt->add_option("--basis", llt_basis, "m|e|h|p|s|f (default m)");
    llt->add_flag("--json", llt_json, "machine-readable output");

    auto* chrom = app.add_subcommand("chromatic", "chromatic coloring sum of G(w)");
    std::string ch_w, ch_basis = "m";
    bool ch_json = false;
    chrom->add_option("--w", ch_w, "312-avoiding permutation, one-line")->required();
    chrom->add_option("--basis", ch_basis, "m|e|h|p|s|f (default m)");
    chrom->add_flag("--json", ch_json, "machine-readable output");

    // immanant
    auto* imm = app.add_subcommand("immanant", "generating immanant of an induced trace");
    int im_n = 0;
    std::string im_family, im_lambda;
    bool im_json = false;
    imm->add_option("--n", im_n, "rank")->required()->check(CLI::PositiveNumber);
    imm->add_option("--family", im_family,
                    "eps|eta|eps_llt|eta_llt|psi|chi|phi|gamma|psi_llt")
        ->required();
    imm->add_option("--lambda", im_lambda, "partition of n")->required();
    imm->add_flag("--json", im_json, "machine-readable output");

    // verify
    auto* verify = app.add_subcommand("verify", "run an identity verification suite");
    std::string vf_suite;
    int vf_n = 0;
    bool vf_json = false;
    std::string suites_help = "all";
    for (const auto& s : verification_suites()) suites_help += "|" + s;
    verify->add_option("suite", vf_suite, suites_help)->required();
    verify->add_option("--n", vf_n, "rank to verify at")->required()->check(
        CLI::PositiveNumber);
    verify->add_flag("--json", vf_json, "machine-readable output");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    if (*klpoly) return cmd_klpoly(kl_n, kl_u, kl_w, kl_json);
    if (*qnorm) return cmd_qnormalize(qn_n, qn_word, qn_json);
    if (*trace) return cmd_trace(tr_n, tr_family, tr_lambda, tr_at, tr_json);
    if (*llt) return cmd_coloring(llt_w, llt_basis, llt_json, true);
    if (*chrom) return cmd_coloring(ch_w, ch_basis, ch_json, false);
    if (*imm) return cmd_immanant(im_n, im_family, im_lambda, im_json);
    if (*verify) return cmd_verify(vf_suite, vf_n, vf_json);
    return 2;
}

} // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const input_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const guard_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const error& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 1;
    }
}
