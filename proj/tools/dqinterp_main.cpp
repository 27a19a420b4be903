// dqinterp: sample rigid-transform interpolations between two poses.
//
//   dqinterp interp  --from "px py pz qw qx qy qz" --to "..." [--method sclerp] [--beta 0.5]
//                    [--samples 101] [--out file]
//   dqinterp compare --from "..." --to "..." [--beta 0.5] [--samples 101] [--out file]

#include <fstream>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "dqinterp/cli.hpp"

namespace {

struct Options {
    std::string from;
    std::string to;
    std::string method = "sclerp";
    double beta = 0.5;
    std::size_t samples = 101;
    std::string out;
};

void add_common(CLI::App* cmd, Options& opt) {
    cmd->add_option("--from", opt.from, "start pose \"px py pz qw qx qy qz\"")->required();
    cmd->add_option("--to", opt.to, "end pose \"px py pz qw qx qy qz\"")->required();
    cmd->add_option("--beta", opt.beta, "kenlerp coupling bias")->capture_default_str();
    cmd->add_option("--samples", opt.samples, "number of samples, >= 2")->capture_default_str();
    cmd->add_option("--out", opt.out, "output path (default: standard output)");
}

template <typename Fn>
int write_to(const std::string& path, Fn&& fn) {
    if (path.empty()) {
        fn(std::cout);
        std::cout.flush();
        return std::cout ? 0 : 1;
    }
    std::ostringstream buffer;
    fn(buffer);
    std::ofstream file(path, std::ios::binary);
    file << buffer.str();
    if (!file) {
        std::cerr << "dqinterp: error: cannot write " << path << '\n';
        return 1;
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Dual-quaternion rigid-transform interpolation"};
    app.require_subcommand(1);

    Options opt;
    CLI::App* interp = app.add_subcommand("interp", "sample one interpolation method");
    add_common(interp, opt);
    interp->add_option("--method", opt.method, "sep | dlb | sclerp | kenlerp")
        ->check(CLI::IsMember({"sep", "dlb", "sclerp", "kenlerp"}))
        ->capture_default_str();

    CLI::App* compare = app.add_subcommand("compare", "sample all methods and summarize their metrics");
    add_common(compare, opt);

    CLI11_PARSE(app, argc, argv);

    using namespace dqinterp;
    try {
        const Posed from = parse_pose(opt.from);
        const Posed to = parse_pose(opt.to);
        if (interp->parsed()) {
            const InterpolationMethod method{*parse_method(opt.method), opt.beta};
            return write_to(opt.out, [&](std::ostream& os) { run_interpolate(from, to, method, opt.samples, os); });
        }
        return write_to(opt.out, [&](std::ostream& os) { run_compare(from, to, opt.beta, opt.samples, os); });
    } catch (const Error& e) {
        std::cerr << "dqinterp: error: " << e.what() << '\n';
        return 2;
    }
}
