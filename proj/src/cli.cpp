#include "rademacher/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>

#include "rademacher/dedekind.hpp"
#include "rademacher/error.hpp"
#include "rademacher/eta.hpp"
#include "rademacher/fricke_symbol.hpp"
#include "rademacher/render.hpp"
#include "rademacher/text_format.hpp"
#include "rademacher/tridiag.hpp"

namespace rademacher::cli {

namespace {

using Json = nlohmann::ordered_json;

constexpr int kDefaultPrecision = 50;
constexpr int kReportDigits = 20;

Json integer_json(const Integer& x) {
    if (fits_int64(x)) return to_int64(x);
    return x.get_str();
}

Json word_json(const EdgeWord& w) {
    Json arr = Json::array();
    for (const Integer& a : w.exponents) arr.push_back(integer_json(a));
    return arr;
}

Json endpoints_json(const EdgeWord& w) {
    Json arr = Json::array();
    for (const Farey& f : endpoints(w)) arr.push_back(f.to_string());
    return arr;
}

int default_precision() {
    if (const char* env = std::getenv("RADEMACHER_PRECISION"); env && *env) {
        Integer v = parse_integer(env);
        if (!fits_int64(v)) fail(ErrorCode::usage_error, "RADEMACHER_PRECISION is out of range");
        return static_cast<int>(to_int64(v));
    }
    return kDefaultPrecision;
}

Real parse_tolerance(const std::string& text, mpfr_prec_t bits) {
    Real t(bits);
    if (mpfr_set_str(t.get(), text.c_str(), 10, MPFR_RNDN) != 0 || t.sign() <= 0)
        fail(ErrorCode::parse_error, "tolerance must be a positive decimal, got '" + text + "'");
    return t;
}

void print_plain(const Json& j, std::ostream& out) {
    for (const auto& [key, value] : j.items()) {
        out << key << ':';
        if (value.is_array()) {
            for (const auto& item : value) out << ' ' << (item.is_string() ? item.get<std::string>() : item.dump());
        } else {
            out << ' ' << (value.is_string() ? value.get<std::string>() : value.dump());
        }
        out << '\n';
    }
}

Json report_json(const VerificationReport& r, const Real& tolerance, bool pass) {
    Json j;
    j["lhs"] = r.lhs.to_string(r.precision);
    j["rhs"] = r.rhs.to_string(r.precision);
    j["residual"] = r.residual.to_string(kReportDigits);
    j["tolerance"] = tolerance.to_string(kReportDigits);
    j["truncation_terms"] = r.truncation_terms;
    j["precision"] = r.precision;
    j["pass"] = pass;
    return j;
}

// Gamma_0^+(p) element from --p/--matrix (det 1 or det p) or --fricke.
FrickeElement fricke_input(const std::optional<long>& p, const std::string& matrix, const std::string& fricke) {
    if (!fricke.empty()) {
        if (!matrix.empty()) fail(ErrorCode::usage_error, "give either --matrix or --fricke, not both");
        FrickeElement e = parse_fricke(fricke);
        if (p && *p != e.prime().value()) fail(ErrorCode::usage_error, "--p disagrees with the prime in --fricke");
        return e;
    }
    if (matrix.empty()) fail(ErrorCode::usage_error, "one of --matrix or --fricke is required");
    if (!p) fail(ErrorCode::usage_error, "--p is required with --matrix");
    OddPrime prime(*p);
    IntMatrix2 m = parse_int_matrix(matrix);
    return classify(prime, m, m.det() == 1 ? DetScale::one : DetScale::prime);
}

struct Inputs {
    std::string matrix, fricke, word, z, tolerance, out_file;
    std::optional<long> p;
    std::optional<int> precision;
    std::string x_min, x_max, height_cap;
    std::optional<int> width, height;
    bool no_labels = false;
};

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Rademacher symbols, Farey edge paths and eta transformation checks"};
    app.require_subcommand(1);
    bool plain = false;
    app.add_flag("--plain", plain, "plain text instead of JSON");
    Inputs in;

    auto* phi = app.add_subcommand("phi", "Rademacher symbol of an SL2(Z) matrix");
    phi->add_option("--matrix", in.matrix, "a,b,c,d")->required();

    auto* phi_p_cmd = app.add_subcommand("phi-p", "Rademacher symbol of an element of Gamma_0^+(p)");
    phi_p_cmd->add_option("--p", in.p, "odd prime");
    phi_p_cmd->add_option("--matrix", in.matrix, "a,b,c,d with det 1 (Gamma_0(p)) or det p (Fricke coset)");
    phi_p_cmd->add_option("--fricke", in.fricke, "p:alpha,beta,gamma,delta");

    auto* decompose_cmd = app.add_subcommand("decompose", "turn word and edge path of a matrix");
    decompose_cmd->add_option("--matrix", in.matrix, "a,b,c,d")->required();

    auto* endpoints_cmd = app.add_subcommand("endpoints", "vertices of the based edge path of a word");
    endpoints_cmd->add_option("--word", in.word, "a1,a2,... or [a1,a2,...]")->required();

    auto* km = app.add_subcommand("km", "trace, signature and trace - 3 signature of a word");
    km->add_option("--word", in.word, "a1,a2,... or [a1,a2,...]")->required();

    auto* verify_eta = app.add_subcommand("verify-eta", "residual of the eta transformation law");
    verify_eta->add_option("--matrix", in.matrix, "a,b,c,d")->required();

    auto* verify_t1 = app.add_subcommand("verify-theorem1", "residual of the eta_p transformation law");
    verify_t1->add_option("--p", in.p, "odd prime");
    verify_t1->add_option("--matrix", in.matrix, "a,b,c,d with det 1 or det p");
    verify_t1->add_option("--fricke", in.fricke, "p:alpha,beta,gamma,delta");
    for (auto* cmd : {verify_eta, verify_t1}) {
        cmd->add_option("--z", in.z, "re,im (decimals or fractions)")->required();
        cmd->add_option("--precision", in.precision, "decimal digits");
        cmd->add_option("--tolerance", in.tolerance, "pass threshold for the residual");
    }

    auto* render = app.add_subcommand("render", "SVG drawing of the based edge path of a word");
    render->add_option("--word", in.word, "a1,a2,... or [a1,a2,...]")->required();
    render->add_option("--out", in.out_file, "output file (default: standard output)");
    render->add_option("--x-min", in.x_min, "left edge of the drawing");
    render->add_option("--x-max", in.x_max, "right edge of the drawing");
    render->add_option("--height-cap", in.height_cap, "clip height of edges to infinity");
    render->add_option("--width", in.width, "canvas width in pixels");
    render->add_option("--height", in.height, "canvas height in pixels");
    render->add_flag("--no-labels", in.no_labels, "omit vertex labels");

    auto report_error = [&](ErrorCode code, const std::string& message) {
        Json j;
        j["error"] = {{"code", std::string(code_name(code))}, {"message", message}};
        err << j.dump() << '\n';
        return (code == ErrorCode::usage_error || code == ErrorCode::parse_error) ? kExitUsage : kExitDomain;
    };

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        return report_error(ErrorCode::usage_error, e.what());
    }

    auto emit = [&](const Json& j) {
        if (plain)
            print_plain(j, out);
        else
            out << j.dump() << '\n';
    };

    try {
        if (phi->parsed()) {
            emit(Json{{"phi", integer_json(rademacher_phi(parse_matrix(in.matrix)))}});
        } else if (phi_p_cmd->parsed()) {
            emit(Json{{"phi_p", to_string(phi_p(fricke_input(in.p, in.matrix, in.fricke)))}});
        } else if (decompose_cmd->parsed()) {
            EdgeWord w = decompose(parse_matrix(in.matrix));
            emit(Json{{"word", word_json(w)}, {"endpoints", endpoints_json(w)}});
        } else if (endpoints_cmd->parsed()) {
            EdgeWord w = parse_word(in.word);
            emit(Json{{"word", word_json(w)}, {"endpoints", endpoints_json(w)}});
        } else if (km->parsed()) {
            EdgeWord w = parse_word(in.word);
            emit(Json{{"word", word_json(w)},
                      {"trace", integer_json(trace(w))},
                      {"signature", signature(w)},
                      {"phi", integer_json(km_phi(w))}});
        } else if (verify_eta->parsed() || verify_t1->parsed()) {
            Precision precision(in.precision.value_or(default_precision()));
            const mpfr_prec_t bits = precision.working_bits();
            HPComplex z = parse_complex(in.z, bits);
            Real tolerance = in.tolerance.empty() ? Real::pow10(-(precision.digits() - 15), bits)
                                                  : parse_tolerance(in.tolerance, bits);
            VerificationReport report =
                verify_eta->parsed() ? verify_eta_transform(parse_matrix(in.matrix), z, precision)
                                     : verify_theorem1(fricke_input(in.p, in.matrix, in.fricke), z, precision);
            bool pass = report.residual_below(tolerance);
            emit(report_json(report, tolerance, pass));
            return pass ? kExitOk : kExitDomain;
        } else if (render->parsed()) {
            EdgeWord w = parse_word(in.word);
            RenderOptions options = RenderOptions::fit(w);
            if (!in.x_min.empty()) options.x_min = parse_rational(in.x_min);
            if (!in.x_max.empty()) options.x_max = parse_rational(in.x_max);
            if (!in.height_cap.empty()) options.height_cap = parse_rational(in.height_cap);
            if (in.width) options.width_px = *in.width;
            if (in.height) options.height_px = *in.height;
            options.label_vertices = !in.no_labels;
            std::string svg = render_svg(w, options);
            if (in.out_file.empty()) {
                out << svg;
            } else {
                std::ofstream file(in.out_file, std::ios::binary);
                if (!file) fail(ErrorCode::usage_error, "cannot open '" + in.out_file + "' for writing");
                file << svg;
                emit(Json{{"out", in.out_file}, {"bytes", svg.size()}});
            }
        }
    } catch (const Error& e) {
        return report_error(e.code(), e.what());
    }
    return kExitOk;
}

}  // namespace rademacher::cli
