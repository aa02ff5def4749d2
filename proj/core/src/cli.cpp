#include "schurtab/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "json_detail.hpp"
#include "schurtab/enumerate.hpp"
#include "schurtab/json_io.hpp"
#include "schurtab/straighten.hpp"
#include "schurtab/verify.hpp"

namespace schurtab {

namespace {

using detail::json;

struct CommonArgs {
    std::string group;
    int rank = 1;
    std::string shape;
    bool sundaramPlain = false;
    unsigned long long seed = 0;
    int threads = 1;
    std::int64_t maxDim = 200000;
    int maxSize = 4;
    int maxRank = 3;
    int samples = 500;
    bool injectFault = false;
    std::string inputPath;
};

Shape parseShape(const CommonArgs& a, BasisFamily family) {
    Partition p = Partition::fromString(a.shape);
    return Shape(p, a.rank, familyNeedsSpin(family));
}

FamilyOptions familyOptions(const CommonArgs& a) {
    FamilyOptions opts;
    opts.sundaramRequireSymplectic = !a.sundaramPlain;
    return opts;
}

VerifyConfig verifyConfig(const CommonArgs& a) {
    VerifyConfig cfg;
    if (!a.group.empty()) cfg.family = familyFromName(a.group);
    cfg.rank = a.rank;
    cfg.maxSize = a.maxSize;
    cfg.maxRank = a.maxRank;
    cfg.seed = a.seed;
    cfg.samples = a.samples;
    cfg.maxDimension = a.maxDim;
    cfg.threads = a.threads;
    cfg.injectFault = a.injectFault;
    cfg.familyOptions = familyOptions(a);
    return cfg;
}

std::string readInput(const std::string& path) {
    if (path == "-") {
        std::ostringstream ss;
        ss << std::cin.rdbuf();
        return ss.str();
    }
    std::ifstream in(path);
    if (!in) fail(ErrorCode::Usage, "cannot open '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

} // namespace

int runCli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"tableau models of the classical-group Schur modules: enumeration, "
                 "straightening, and exact verification oracles"};
    app.require_subcommand(1);
    CommonArgs a;

    auto addGroup = [&](CLI::App* cmd, bool required = true) {
        auto* opt = cmd->add_option("--group", a.group,
                                    "gl | sp | o-odd | o-even | sundaram | pin-odd | pin-even");
        if (required) opt->required();
        cmd->add_option("--rank", a.rank, "group rank n")->required();
    };
    auto addShape = [&](CLI::App* cmd) {
        cmd->add_option("--shape", a.shape, "comma-separated parts, empty for the empty shape");
        cmd->add_flag("--sundaram-plain", a.sundaramPlain,
                      "drop the row-index condition from the sundaram family");
    };
    auto addResources = [&](CLI::App* cmd) {
        cmd->add_option("--threads", a.threads, "worker threads for verification loops");
        cmd->add_option("--max-dim", a.maxDim, "tensor-space dimension bound");
        cmd->add_option("--seed", a.seed, "seed for randomized checks");
    };

    auto* enumerate = app.add_subcommand("enumerate", "list the basis tableaux of a shape");
    addGroup(enumerate);
    addShape(enumerate);

    auto* count = app.add_subcommand("count", "count the basis tableaux of a shape");
    addGroup(count);
    addShape(count);

    auto* weightpoly = app.add_subcommand("weightpoly", "weight generating function of the basis");
    addGroup(weightpoly);
    addShape(weightpoly);

    auto* straighten = app.add_subcommand("straighten", "expand a filling in the basis");
    addGroup(straighten);
    straighten->add_option("--input", a.inputPath, "filling or formal-sum JSON file, - for stdin")
        ->required();
    straighten->add_option("--max-dim", a.maxDim, "tensor-space dimension bound");

    auto* verify = app.add_subcommand("verify", "run one verification task");
    verify->require_subcommand(1);
    std::vector<std::pair<std::string, std::string>> taskDefs = {
        {"dim", "basis count = classical dimension = quotient dimension"},
        {"independence", "basis tableaux are independent modulo the relations"},
        {"character", "weight polynomial = character"},
        {"branching", "restriction multiplicities against the closed-form rules"},
        {"closure", "relation-closure claims"},
        {"straighten-soundness", "straightening is sound, idempotent, linear"},
        {"group-action", "relation span is invariant under the documented generators"},
    };
    std::map<std::string, CLI::App*> taskCmds;
    for (const auto& [name, desc] : taskDefs) {
        CLI::App* cmd = verify->add_subcommand(name, desc);
        if (name == "branching") {
            cmd->add_option("--max-rank", a.maxRank, "largest source rank");
            cmd->add_option("--max-size", a.maxSize, "largest |lambda|");
        } else {
            addGroup(cmd);
            cmd->add_option("--max-size", a.maxSize, "largest |lambda|");
            cmd->add_flag("--sundaram-plain", a.sundaramPlain,
                          "drop the row-index condition from the sundaram family");
        }
        if (name == "straighten-soundness")
            cmd->add_option("--samples", a.samples, "random fillings per shape");
        if (name == "dim" || name == "independence")
            cmd->add_flag("--inject-fault", a.injectFault,
                          "corrupt the basis on purpose (exit-code test hook)");
        addResources(cmd);
        taskCmds[name] = cmd;
    }

    auto* report = app.add_subcommand("report", "aggregate all verification tasks and the errata ledger");
    report->add_option("--samples", a.samples, "random fillings per shape");
    addResources(report);

    try {
        std::vector<std::string> argv = args;
        argv.insert(argv.begin(), "schurtab");
        std::vector<const char*> cargv;
        for (const std::string& s : argv) cargv.push_back(s.c_str());
        app.parse(static_cast<int>(cargv.size()), cargv.data());
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) { // --help
            out << app.help() << std::flush;
            return 0;
        }
        err << e.what() << "\n";
        return 2;
    }

    try {
        if (*enumerate || *count || *weightpoly) {
            BasisFamily family = familyFromName(a.group);
            Shape shape = parseShape(a, family);
            if (*enumerate) {
                json arr = json::array();
                for (const Filling& f : enumerateBasis(shape, family, familyOptions(a)))
                    arr.push_back(detail::fillingToJson(f));
                out << arr.dump(2) << "\n";
            } else if (*count) {
                auto basis = enumerateBasis(shape, family, familyOptions(a));
                json j{{"shape", shape.partition().parts()},
                       {"family", familyName(family)},
                       {"count", basis.size()}};
                out << j.dump() << "\n";
            } else {
                Laurent poly = weightPolynomial(shape, family, familyOptions(a));
                json j = detail::laurentToJson(poly);
                j["shape"] = shape.partition().parts();
                j["family"] = familyName(family);
                out << j.dump(2) << "\n";
            }
            return 0;
        }

        if (*straighten) {
            BasisFamily family = familyFromName(a.group);
            FormalSum x = formalSumFromJson(readInput(a.inputPath));
            TensorOracle* oracle = nullptr;
            std::optional<TensorOracle> storage;
            if (!x.empty()) {
                OracleOptions opts;
                opts.maxDimension = a.maxDim;
                storage.emplace(x.terms().begin()->first.shape(),
                                GroupSpec{groupFor(family), a.rank}, opts);
                oracle = &*storage;
            }
            StraightenReport rep = expressInBasis(x, family, oracle);
            out << detail::straightenReportToJson(rep).dump(2) << "\n";
            return 0;
        }

        VerifyOutcome outcome;
        if (*report) {
            err << "running the full verification matrix (seed " << a.seed << ")\n";
            outcome = runReport(verifyConfig(a));
        } else {
            VerifyConfig cfg = verifyConfig(a);
            const std::map<std::string, VerifyOutcome (*)(const VerifyConfig&)> runners = {
                {"dim", verifyDim},
                {"independence", verifyIndependence},
                {"character", verifyCharacter},
                {"branching", verifyBranching},
                {"closure", verifyClosure},
                {"straighten-soundness", verifyStraightenSoundness},
                {"group-action", verifyGroupAction},
            };
            for (const auto& [name, fn] : runners)
                if (taskCmds.count(name) && *taskCmds.at(name)) {
                    err << "verify " << name << ": " << (a.group.empty() ? "all" : a.group)
                        << " rank " << a.rank << "\n";
                    outcome = fn(cfg);
                }
        }
        out << outcome.json << "\n";
        return outcome.pass ? 0 : 1;
    } catch (const Error& e) {
        switch (e.code()) {
        case ErrorCode::Usage:
        case ErrorCode::ResourceLimit:
            err << "error: " << e.what() << "\n";
            return 2;
        default: {
            json j{{"pass", false}, {"diagnostic", e.what()}};
            out << j.dump(2) << "\n";
            return 1;
        }
        }
    }
}

} // namespace schurtab
