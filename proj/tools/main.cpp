#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "cyclicpoly/cyclic.hpp"
#include "cyclicpoly/errors.hpp"
#include "cyclicpoly/exactcomb.hpp"
#include "cyclicpoly/oracle.hpp"
#include "cyclicpoly/shape.hpp"
#include "cyclicpoly/sweep.hpp"

namespace {

using namespace cyclicpoly;

// exit codes
constexpr int kOk = 0;
constexpr int kCheckFailed = 1;
constexpr int kUsageError = 2;
constexpr int kResourceGuard = 3;

std::string join_counts(const std::vector<Count>& xs, const char* sep = " ") {
    std::ostringstream os;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        if (i != 0) {
            os << sep;
        }
        os << xs[i];
    }
    return os.str();
}

// Output sink: --out FILE or stdout.
class Sink {
public:
    explicit Sink(const std::string& path) {
        if (!path.empty()) {
            file_.emplace(path);
            if (!*file_) {
                throw std::runtime_error("cannot open output file: " + path);
            }
        }
    }
    std::ostream& stream() { return file_ ? *file_ : std::cout; }
    // Reports stream health so I/O failures surface as a nonzero exit.
    bool ok() {
        stream().flush();
        return static_cast<bool>(stream());
    }

private:
    std::optional<std::ofstream> file_;
};

struct Options {
    std::int64_t v = 0;
    std::int64_t d = 0;
    std::int64_t d_min = 2, d_max = 2;
    std::int64_t v_min = 3, v_max = 3;
    std::string format = "text";
    std::string route = "direct";
    std::vector<std::string> checks;
    bool audit = false;
    bool list_facets = false;
    unsigned jobs = 1;
    std::int64_t oracle_cap = kDefaultOracleCap;
    std::string out_path;
};

ExtendedFSequence route_f_vector(const std::string& route, const PolytopeParams& params,
                                 std::int64_t cap) {
    if (route == "direct") {
        return f_vector_direct(params);
    }
    if (route == "triangle") {
        return f_vector_from_triangle(build_triangle(params));
    }
    if (route == "oracle") {
        return oracle_f_vector(params, cap);
    }
    throw std::invalid_argument("unknown route: " + route);
}

int cmd_fvector(const Options& opt) {
    const PolytopeParams params{opt.v, opt.d};
    params.validate();
    Sink sink(opt.out_path);
    const Format format = parse_format(opt.format);

    if (opt.route != "all") {
        const ExtendedFSequence f = route_f_vector(opt.route, params, opt.oracle_cap);
        if (format == Format::Text) {
            sink.stream() << join_counts(f.entries()) << '\n';
        } else {
            if (format == Format::Csv) {
                sink.stream() << kCsvHeader << '\n';
            }
            sink.stream() << render_record(make_pair_record(f), format);
        }
        return sink.ok() ? kOk : kCheckFailed;
    }

    const ExtendedFSequence direct = f_vector_direct(params);
    const ExtendedFSequence triangle = f_vector_from_triangle(build_triangle(params));
    std::optional<ExtendedFSequence> oracle;
    if (params.v <= opt.oracle_cap) {
        oracle = oracle_f_vector(params, opt.oracle_cap);
    }
    bool agree = direct == triangle && (!oracle || *oracle == direct);

    if (format == Format::Json) {
        nlohmann::ordered_json obj;
        obj["v"] = params.v;
        obj["d"] = params.d;
        obj["routes"]["direct"] = make_pair_record(direct).f_vector;
        obj["routes"]["triangle"] = make_pair_record(triangle).f_vector;
        if (oracle) {
            obj["routes"]["oracle"] = make_pair_record(*oracle).f_vector;
        }
        obj["agree"] = agree;
        sink.stream() << obj.dump() << '\n';
    } else {
        sink.stream() << "direct:   " << join_counts(direct.entries()) << '\n';
        sink.stream() << "triangle: " << join_counts(triangle.entries()) << '\n';
        if (oracle) {
            sink.stream() << "oracle:   " << join_counts(oracle->entries()) << '\n';
        } else {
            sink.stream() << "oracle:   skipped (v > cap " << opt.oracle_cap
                          << ", raise with --oracle-cap)" << '\n';
        }
        sink.stream() << "routes agree: " << (agree ? "yes" : "no") << '\n';
    }
    if (!sink.ok()) {
        return kCheckFailed;
    }
    return agree ? kOk : kCheckFailed;
}

int cmd_hvector(const Options& opt) {
    const PolytopeParams params{opt.v, opt.d};
    const HVector h = h_vector(params);
    Sink sink(opt.out_path);
    sink.stream() << join_counts(h.entries) << '\n';
    return sink.ok() ? kOk : kCheckFailed;
}

int cmd_triangle(const Options& opt) {
    const PolytopeParams params{opt.v, opt.d};
    const FanTriangle tri = build_triangle(params);
    Sink sink(opt.out_path);
    for (std::int64_t k = 0; k <= tri.dim(); ++k) {
        sink.stream() << "P(" << k << "): " << join_counts(tri.row(k));
        const auto dips = find_dips(PositiveSequence(tri.row(k)));
        if (!dips.empty()) {
            sink.stream() << "   dips at:";
            for (std::int64_t j : dips) {
                sink.stream() << " j=" << j;
            }
        }
        sink.stream() << '\n';
    }
    if (!opt.audit) {
        return sink.ok() ? kOk : kCheckFailed;
    }
    const DipAudit audit = audit_dip_propagation(params);
    if (!audit.pass) {
        std::cerr << "audit: prefix rows dip-free: " << audit.prefix_rows_dip_free << '\n'
                  << "audit: dip propagation:     " << audit.propagation_ok << '\n'
                  << "audit: seeds bounded:       " << audit.seeds_bounded << '\n'
                  << "audit: final row dip-free:  " << audit.final_row_dip_free << '\n';
    }
    sink.stream() << (audit.pass ? "PASS" : "FAIL") << '\n';
    if (!sink.ok()) {
        return kCheckFailed;
    }
    return audit.pass ? kOk : kCheckFailed;
}

int cmd_check(const Options& opt) {
    const PolytopeParams params{opt.v, opt.d};
    const ExtendedFSequence f = f_vector_triangle_streaming(params);
    const PairRecord rec = make_pair_record(f);
    Sink sink(opt.out_path);
    const Format format = parse_format(opt.format);
    if (format == Format::Text) {
        sink.stream() << "C(" << params.v << "," << params.d
                      << ") f = " << join_counts(f.entries()) << '\n';
        sink.stream() << "log-concave: " << (rec.shape.log_concave ? "true" : "false") << '\n';
        sink.stream() << "unimodal: " << (rec.shape.unimodal ? "true" : "false") << '\n';
        if (rec.shape.peak_start) {
            sink.stream() << "peak: [" << *rec.shape.peak_start << "," << *rec.shape.peak_end
                          << "]" << '\n';
        }
    } else {
        if (format == Format::Csv) {
            sink.stream() << kCsvHeader << '\n';
        }
        sink.stream() << render_record(rec, format);
    }
    if (!sink.ok()) {
        return kCheckFailed;
    }
    return rec.shape.log_concave ? kOk : kCheckFailed;
}

int cmd_oracle(const Options& opt) {
    const PolytopeParams params{opt.v, opt.d};
    params.validate();
    Sink sink(opt.out_path);
    const Format format = parse_format(opt.format);
    const FacetList facets = enumerate_facets(params, opt.oracle_cap);
    const ExtendedFSequence f = oracle_f_vector(params, opt.oracle_cap);
    if (format == Format::Text) {
        if (opt.list_facets) {
            for (const VertexSet& facet : facets.facets) {
                std::ostringstream os;
                for (std::size_t i = 0; i < facet.size(); ++i) {
                    os << (i ? " " : "") << facet[i];
                }
                sink.stream() << os.str() << '\n';
            }
        }
        sink.stream() << "facets: " << facets.facets.size() << '\n';
        sink.stream() << "f = " << join_counts(f.entries()) << '\n';
    } else {
        if (format == Format::Csv) {
            sink.stream() << kCsvHeader << '\n';
        }
        sink.stream() << render_record(make_pair_record(f), format);
    }
    return sink.ok() ? kOk : kCheckFailed;
}

unsigned parse_checks(const std::vector<std::string>& names) {
    if (names.empty()) {
        return kDefaultChecks;
    }
    unsigned checks = 0;
    for (const std::string& name : names) {
        if (name == "logconcave") {
            checks |= static_cast<unsigned>(Check::LogConcave);
        } else if (name == "euler") {
            checks |= static_cast<unsigned>(Check::Euler);
        } else if (name == "routeeq") {
            checks |= static_cast<unsigned>(Check::RouteEquivalence);
        } else {
            throw std::invalid_argument("unknown check: " + name +
                                        " (known: logconcave, euler, routeeq)");
        }
    }
    return checks;
}

int cmd_sweep(const Options& opt) {
    const unsigned checks = parse_checks(opt.checks);
    const Format format = parse_format(opt.format);
    const SweepReport report =
        sweep_verify(opt.d_min, opt.d_max, opt.v_min, opt.v_max, checks, opt.jobs);

    Sink sink(opt.out_path);
    render(report, format, sink.stream());
    if (!sink.ok()) {
        std::cerr << "error: failed writing sweep report" << '\n';
        return kCheckFailed;
    }

    for (const SweepFailure& failure : report.failures) {
        std::cerr << "FAIL C(" << failure.v << "," << failure.d << ") " << failure.check << ": "
                  << failure.details << '\n';
    }
    std::cerr << "checked " << report.checked << " pairs, " << report.failures.size()
              << " failures, " << report.elapsed.count() << " ms" << '\n';
    return report.pass() ? kOk : kCheckFailed;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact f-vectors of cyclic polytopes C(v,d): two independent computation "
                 "routes, a Gale-evenness face-counting oracle, sequence shape analysis, "
                 "and bulk verification sweeps."};
    app.require_subcommand(1);

    Options opt;

    auto add_params = [&opt](CLI::App* cmd) {
        cmd->add_option("--v", opt.v, "number of vertices")->required();
        cmd->add_option("--d", opt.d, "dimension")->required();
    };
    auto add_format = [&opt](CLI::App* cmd) {
        cmd->add_option("--format", opt.format, "output format: json, csv, text")
            ->default_val("text");
    };
    auto add_out = [&opt](CLI::App* cmd) {
        cmd->add_option("--out", opt.out_path, "write output to FILE (default stdout)");
    };
    auto add_cap = [&opt](CLI::App* cmd) {
        cmd->add_option("--oracle-cap", opt.oracle_cap,
                        "largest v the face enumeration accepts")
            ->default_val(kDefaultOracleCap);
    };

    CLI::App* fvector = app.add_subcommand("fvector", "f-vector of C(v,d)");
    add_params(fvector);
    add_format(fvector);
    add_out(fvector);
    add_cap(fvector);
    fvector->add_option("--route", opt.route, "computation route: direct, triangle, oracle, all")
        ->default_val("direct")
        ->check(CLI::IsMember({"direct", "triangle", "oracle", "all"}));

    CLI::App* hvector = app.add_subcommand("hvector", "h-vector of C(v,d)");
    add_params(hvector);
    add_out(hvector);

    CLI::App* triangle = app.add_subcommand(
        "triangle", "generalized Pascal triangle of C(v,d), one row per line");
    add_params(triangle);
    add_out(triangle);
    triangle->add_flag("--audit", opt.audit, "audit the row-to-row dip propagation");

    CLI::App* check = app.add_subcommand("check", "shape verdicts for the f-sequence of C(v,d)");
    add_params(check);
    add_format(check);
    add_out(check);

    CLI::App* oracle =
        app.add_subcommand("oracle", "f-vector by brute-force Gale facet enumeration");
    add_params(oracle);
    add_format(oracle);
    add_out(oracle);
    add_cap(oracle);
    oracle->add_flag("--facets", opt.list_facets, "list the facets (text format)");

    CLI::App* sweep = app.add_subcommand("sweep", "verify checks over ranges of (v,d)");
    sweep->add_option("--d-min", opt.d_min, "smallest dimension")->required();
    sweep->add_option("--d-max", opt.d_max, "largest dimension")->required();
    sweep->add_option("--v-min", opt.v_min, "smallest vertex count")->required();
    sweep->add_option("--v-max", opt.v_max, "largest vertex count")->required();
    sweep->add_option("--checks", opt.checks,
                      "checks to run: logconcave, euler, routeeq (default: all)")
        ->delimiter(',');
    sweep->add_option("--jobs", opt.jobs, "worker threads")->default_val(1);
    add_format(sweep);
    add_out(sweep);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kOk : kUsageError;
    }

    try {
        if (opt.oracle_cap > kDefaultOracleCap) {
            std::cerr << "warning: oracle cap raised to " << opt.oracle_cap
                      << "; enumeration cost grows as C(v,d) * 2^d" << '\n';
        }
        if (fvector->parsed()) {
            return cmd_fvector(opt);
        }
        if (hvector->parsed()) {
            return cmd_hvector(opt);
        }
        if (triangle->parsed()) {
            return cmd_triangle(opt);
        }
        if (check->parsed()) {
            return cmd_check(opt);
        }
        if (oracle->parsed()) {
            return cmd_oracle(opt);
        }
        if (sweep->parsed()) {
            return cmd_sweep(opt);
        }
        std::cerr << "error: no subcommand" << '\n';
        return kUsageError;
    } catch (const params_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kUsageError;
    } catch (const cap_error& e) {
        std::cerr << "error: " << e.what() << " (raise with --oracle-cap)" << '\n';
        return kResourceGuard;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kUsageError;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kCheckFailed;
    }
}
