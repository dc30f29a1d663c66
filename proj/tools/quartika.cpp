#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>

#include "quartika/families.hpp"
#include "quartika/records.hpp"
#include "quartika/richmond.hpp"
#include "quartika/search.hpp"

namespace {

using namespace quartika;

struct Emitter {
    std::string format = "csv";
    std::string out_path;
    std::ostream* os = &std::cout;
    std::ofstream file;
    bool header_done = false;

    void open() {
        if (!out_path.empty()) {
            file.open(out_path, std::ios::trunc);
            if (!file) throw Error("BadArgument", "cannot open output file " + out_path);
            os = &file;
        }
    }

    void emit(const OutputRecord& rec) {
        if (!verify(rec.quad)) throw VerificationError("record fails re-verification");
        if (format == "csv") {
            if (!header_done) {
                *os << kCsvHeader << '\n';
                header_done = true;
            }
            *os << to_csv(rec) << '\n';
        } else {
            *os << to_json(rec) << '\n';
        }
    }
};

Integer require_integer(const std::string& text, const std::string& what) {
    auto v = parse_integer(text);
    if (!v) throw CLI::ValidationError(what, "'" + text + "' is not a decimal integer");
    return *v;
}

std::pair<Integer, Integer> parse_multiples(const std::string& text) {
    auto dots = text.find("..");
    if (dots == std::string::npos) {
        Integer j = require_integer(text, "--multiples");
        return {j, j};
    }
    Integer lo = require_integer(text.substr(0, dots), "--multiples");
    Integer hi = require_integer(text.substr(dots + 2), "--multiples");
    if (lo > hi) throw CLI::ValidationError("--multiples", "range is reversed");
    return {lo, hi};
}

unsigned pick_threads(unsigned flag_value, bool parallel_default) {
    if (const char* env = std::getenv("QUARTIKA_THREADS")) {
        int v = std::atoi(env);
        if (v >= 1) return static_cast<unsigned>(v);
    }
    if (flag_value >= 1) return flag_value;
    if (!parallel_default) return 1;
    unsigned hw = std::thread::hardware_concurrency();
    return hw ? hw : 1;
}

std::string meta_join(const std::vector<std::string>& parts) {
    std::string out;
    for (const auto& p : parts) {
        if (!out.empty()) out += ';';
        out += p;
    }
    return out;
}

int run(int argc, char** argv) {
    CLI::App app{"exact solution toolkit for n(x^4+y^4) = z^4+w^4"};
    app.require_subcommand(1);

    Emitter emitter;

    auto add_output_flags = [&](CLI::App* cmd) {
        cmd->add_option("--format", emitter.format, "output format")
            ->check(CLI::IsMember({"csv", "json"}))
            ->capture_default_str();
        cmd->add_option("--out", emitter.out_path, "write records to a file instead of stdout");
    };

    // verify
    std::vector<std::string> verify_args;
    auto* cmd_verify = app.add_subcommand("verify", "check one solution exactly");
    cmd_verify->add_option("values", verify_args, "n x y z w")->expected(5);

    // family
    int family_method = 1;
    std::string family_m, family_n = "1";
    auto* cmd_family = app.add_subcommand("family", "closed-form solution families");
    cmd_family->add_option("--method", family_method, "1 = two-parameter, 2 = odd-parameter")
        ->check(CLI::IsMember({1, 2}))
        ->capture_default_str();
    cmd_family->add_option("--m", family_m, "first parameter")->required();
    cmd_family->add_option("--n", family_n, "second parameter (method 1)");
    add_output_flags(cmd_family);

    // pipeline
    int pipe_method = 1;
    std::string pipe_m = "3", pipe_n = "1", pipe_multiples = "2..5";
    auto* cmd_pipeline = app.add_subcommand("pipeline", "elliptic multiples to solutions");
    cmd_pipeline->add_option("--method", pipe_method, "1, 2, 41 or 17")
        ->check(CLI::IsMember({1, 2, 41, 17}))
        ->capture_default_str();
    cmd_pipeline->add_option("--m", pipe_m, "first parameter (methods 1 and 2)");
    cmd_pipeline->add_option("--n", pipe_n, "second parameter (method 1)");
    cmd_pipeline->add_option("--multiples", pipe_multiples, "multiple index range J1..J2")
        ->capture_default_str();
    add_output_flags(cmd_pipeline);

    // richmond
    std::string rich_n, rich_seed, rich_p;
    int rich_steps = 1;
    auto* cmd_richmond = app.add_subcommand("richmond", "tangent-line descent chain");
    cmd_richmond->add_option("--n", rich_n, "multiplier")->required();
    cmd_richmond->add_option("--seed", rich_seed, "known solution x,y,z,w")->required();
    cmd_richmond->add_option("--steps", rich_steps, "chain length")->capture_default_str();
    cmd_richmond->add_option("--p", rich_p, "preferred selector value (rational a or a/b)");
    add_output_flags(cmd_richmond);

    // search
    std::string s_min = "1", s_max = "1", s_bound = "1", s_checkpoint;
    unsigned s_threads = 0;
    bool s_allow_zero = false, s_no_filter = false, s_keep_fourth = false;
    auto* cmd_search = app.add_subcommand("search", "smallest solutions over a bounded grid");
    cmd_search->add_option("--n-min", s_min, "lowest multiplier")->required();
    cmd_search->add_option("--n-max", s_max, "highest multiplier")->required();
    cmd_search->add_option("--bound", s_bound, "per-coordinate cap")->required();
    cmd_search->add_option("--threads", s_threads, "worker count (QUARTIKA_THREADS overrides)");
    cmd_search->add_option("--checkpoint", s_checkpoint, "progress file, resumed when present");
    cmd_search->add_flag("--allow-zero", s_allow_zero, "admit zero coordinates");
    cmd_search->add_flag("--no-residue-filter", s_no_filter, "search every n in range");
    cmd_search->add_flag("--keep-fourth-powers", s_keep_fourth,
                         "search n with fourth-power divisors too");
    add_output_flags(cmd_search);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        app.exit(e);
        return 0;
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    emitter.open();

    if (cmd_verify->parsed()) {
        Integer vals[5];
        for (int i = 0; i < 5; ++i) vals[i] = require_integer(verify_args[i], "verify");
        if (vals[0] < 1) throw CLI::ValidationError("verify", "n must be >= 1");
        Integer lhs = vals[0] * (pow4(vals[1]) + pow4(vals[2]));
        Integer rhs = pow4(vals[3]) + pow4(vals[4]);
        if (lhs == rhs) {
            std::cout << "OK\n";
            return 0;
        }
        std::cout << "FAIL " << lhs << " != " << rhs << '\n';
        return 1;
    }

    if (cmd_family->parsed()) {
        Integer m = require_integer(family_m, "--m");
        if (family_method == 1) {
            Integer n = require_integer(family_n, "--n");
            std::string meta = meta_join({"m=" + m.get_str(), "n=" + n.get_str()});
            emitter.emit({"family1-2Q", family1_closed_form(m, n, Family1Form::TwoQ), meta});
            emitter.emit({"family1-3Q", family1_closed_form(m, n, Family1Form::ThreeQ), meta});
        } else {
            emitter.emit({"family2", family2_closed_form(m, Family2Form::First),
                          meta_join({"m=" + m.get_str(), "form=first"})});
            emitter.emit({"family2", family2_closed_form(m, Family2Form::Second),
                          meta_join({"m=" + m.get_str(), "form=second"})});
        }
        return 0;
    }

    if (cmd_pipeline->parsed()) {
        auto [lo, hi] = parse_multiples(pipe_multiples);
        if (lo < 1) throw CLI::ValidationError("--multiples", "indices start at 1");
        for (Integer j = lo; j <= hi; ++j) {
            PipelineResult res;
            std::string source, meta;
            try {
                switch (pipe_method) {
                case 1: {
                    Integer m = require_integer(pipe_m, "--m");
                    Integer n = require_integer(pipe_n, "--n");
                    res = pipeline_theorem1(m, n, j);
                    source = "pipeline-t1";
                    meta = meta_join({"m=" + m.get_str(), "n=" + n.get_str(), "j=" + j.get_str()});
                    break;
                }
                case 2: {
                    Integer m = require_integer(pipe_m, "--m");
                    res = pipeline_theorem1(m, Integer(1), j);
                    source = "pipeline-t1";
                    meta = meta_join({"method=2", "m=" + m.get_str(), "j=" + j.get_str()});
                    break;
                }
                case 41:
                    res = pipeline_instance41(j);
                    source = "pipeline-41";
                    meta = "j=" + j.get_str();
                    break;
                default:
                    res = pipeline_instance17(j);
                    source = "pipeline-17";
                    meta = "j=" + j.get_str();
                    break;
                }
            } catch (const ExceptionalPointError&) {
                std::cerr << "note: multiple " << j << " lands on an exceptional point, skipped\n";
                continue;
            }
            emitter.emit({source, res.quad, meta});
        }
        return 0;
    }

    if (cmd_richmond->parsed()) {
        Integer n = require_integer(rich_n, "--n");
        std::istringstream ss(rich_seed);
        std::string piece;
        std::vector<Integer> seed;
        while (std::getline(ss, piece, ',')) seed.push_back(require_integer(piece, "--seed"));
        if (seed.size() != 4) throw CLI::ValidationError("--seed", "expected x,y,z,w");
        Quadruple start{n, abs(seed[0]), abs(seed[1]), abs(seed[2]), abs(seed[3])};
        if (!verify(start)) throw VerificationError("seed fails the equation");

        std::vector<Rational> policy = default_selectors();
        if (!rich_p.empty()) {
            auto slash = rich_p.find('/');
            Rational sel =
                slash == std::string::npos
                    ? Rational(require_integer(rich_p, "--p"))
                    : make_rational(require_integer(rich_p.substr(0, slash), "--p"),
                                    require_integer(rich_p.substr(slash + 1), "--p"));
            policy.insert(policy.begin(), sel);
        }
        ChainResult res = chain(n, start, rich_steps, policy);
        if (res.collapsed) std::cerr << "warning: chain repeated a solution and stopped early\n";
        std::string seed_meta = "seed=" + start.x.get_str() + '/' + start.y.get_str() + '/' +
                                start.z.get_str() + '/' + start.w.get_str();
        for (std::size_t i = 0; i < res.steps.size(); ++i)
            emitter.emit({"richmond", res.steps[i],
                          meta_join({seed_meta, "step=" + std::to_string(i + 1)})});
        return 0;
    }

    if (cmd_search->parsed()) {
        SearchConfig config;
        config.n_min = require_integer(s_min, "--n-min");
        config.n_max = require_integer(s_max, "--n-max");
        config.bound = require_integer(s_bound, "--bound");
        if (s_no_filter) config.residue_filter.clear();
        config.fourth_power_free = !s_keep_fourth;
        config.allow_zero = s_allow_zero;
        config.threads = pick_threads(s_threads, true);
        config.checkpoint = s_checkpoint;
        std::string bound_meta = "B=" + config.bound.get_str();
        for (const SearchOutcome& out : sweep(config)) {
            if (!out.hit) continue;
            emitter.emit({"search", out.hit->quad,
                          meta_join({bound_meta, "s=" + out.hit->s.get_str()})});
        }
        return 0;
    }

    return 2;
}

} // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const CLI::ValidationError& e) {
        std::cerr << "usage error: " << e.what() << '\n';
        return 2;
    } catch (const quartika::Error& e) {
        std::cerr << "error: " << e.name() << ": " << e.what() << '\n';
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
}
