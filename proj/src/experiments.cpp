#include "wpcn/experiments.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <exception>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <thread>

#include "wpcn/solver_dc.hpp"
#include "wpcn/solver_ec.hpp"

namespace wpcn {
namespace {

struct Cell {
    double sweep_value = 0.0;
    double mu = 0.0;
    NetworkConfig cfg;
};

NetworkConfig cell_config(const SweepSpec& spec, double mu, double value) {
    NetworkConfig cfg = spec.base;
    cfg.mu = mu;
    if (spec.kind == SweepKind::power) {
        // The swept value is the common average power; peaks derive from
        // it.
        cfg.p_a_max = value / mu;
        cfg.p_r_max = value / mu;
    } else {
        cfg.d_sr = value;
        cfg.p_a_max = spec.base.p_a_avg() / mu;
        cfg.p_r_max = spec.base.p_r_avg() / mu;
    }
    cfg.validate();
    return cfg;
}

std::vector<SweepRow> run_sweep(const SweepSpec& spec, int workers) {
    spec.validate();

    std::vector<Cell> cells;
    for (const double mu : spec.mu_values)
        for (const double v : spec.sweep_values)
            cells.push_back(Cell{v, mu, cell_config(spec, mu, v)});

    const int n = spec.n_realizations;
    std::vector<std::vector<double>> ec_vals(cells.size());
    std::vector<std::vector<double>> dc_vals(cells.size());
    for (std::size_t ci = 0; ci < cells.size(); ++ci) {
        ec_vals[ci].resize(static_cast<std::size_t>(n));
        dc_vals[ci].resize(static_cast<std::size_t>(n));
    }

    // Workers split the realization range; every value lands at its own
    // index, so the reduction below never depends on scheduling.
    const int w = std::clamp(workers, 1, n);
    auto run_range = [&](int lo, int hi) {
        for (int i = lo; i < hi; ++i) {
            const UnitFading u =
                sample_unit_fading(spec.seed, static_cast<std::uint64_t>(i),
                                   spec.base.reciprocal_channels);
            for (std::size_t ci = 0; ci < cells.size(); ++ci) {
                const ChannelRealization ch = realize(cells[ci].cfg, u);
                ec_vals[ci][static_cast<std::size_t>(i)] =
                    optimize_ec(cells[ci].cfg, ch).throughput;
                dc_vals[ci][static_cast<std::size_t>(i)] =
                    optimize_dc(cells[ci].cfg, ch).throughput;
            }
        }
    };

    std::vector<std::thread> pool;
    std::vector<std::exception_ptr> errors(static_cast<std::size_t>(w));
    for (int t = 0; t < w; ++t) {
        const int lo = static_cast<int>(static_cast<long>(n) * t / w);
        const int hi = static_cast<int>(static_cast<long>(n) * (t + 1) / w);
        pool.emplace_back([&, lo, hi, t] {
            try {
                run_range(lo, hi);
            } catch (...) {
                errors[static_cast<std::size_t>(t)] = std::current_exception();
            }
        });
    }
    for (auto& th : pool) th.join();
    for (const auto& err : errors)
        if (err) std::rethrow_exception(err);

    auto summarize = [&](const std::vector<double>& vals, const Cell& cell,
                         Protocol proto) {
        double sum = 0.0;
        for (const double v : vals) sum += v;
        const double mean = sum / n;
        double ss = 0.0;
        for (const double v : vals) ss += (v - mean) * (v - mean);
        const double sd = n > 1 ? std::sqrt(ss / (n - 1)) : 0.0;
        SweepRow row;
        row.sweep_value = cell.sweep_value;
        row.mu = cell.mu;
        row.protocol = proto;
        row.mean_throughput = mean;
        row.std_error = sd / std::sqrt(static_cast<double>(n));
        row.n = n;
        row.seed = spec.seed;
        return row;
    };

    std::vector<SweepRow> rows;
    for (std::size_t ci = 0; ci < cells.size(); ++ci) {
        rows.push_back(summarize(ec_vals[ci], cells[ci], Protocol::EC));
        rows.push_back(summarize(dc_vals[ci], cells[ci], Protocol::DC));
    }
    std::sort(rows.begin(), rows.end(), [](const SweepRow& a,
                                           const SweepRow& b) {
        if (a.protocol != b.protocol)
            return static_cast<int>(a.protocol) < static_cast<int>(b.protocol);
        if (a.mu != b.mu) return a.mu < b.mu;
        return a.sweep_value < b.sweep_value;
    });
    return rows;
}

} // namespace

const char* to_string(Protocol p) {
    return p == Protocol::EC ? "EC" : "DC";
}

void SweepSpec::validate() const {
    base.validate();
    if (sweep_values.empty())
        throw std::invalid_argument("SweepSpec: sweep_values empty");
    for (std::size_t i = 0; i + 1 < sweep_values.size(); ++i)
        if (!(sweep_values[i] < sweep_values[i + 1]))
            throw std::invalid_argument(
                "SweepSpec: sweep_values must be strictly increasing");
    for (const double v : sweep_values) {
        if (!(v > 0.0))
            throw std::invalid_argument("SweepSpec: sweep values must be positive");
        if (kind == SweepKind::distance && v >= base.d_as)
            throw std::domain_error(
                "SweepSpec: swept d_sr must stay below d_as");
    }
    if (mu_values.empty())
        throw std::invalid_argument("SweepSpec: mu_values empty");
    for (const double mu : mu_values)
        if (!(mu > 0.0 && mu <= 1.0))
            throw std::invalid_argument("SweepSpec: mu values must be in (0, 1]");
    if (n_realizations < 1)
        throw std::invalid_argument("SweepSpec: n_realizations must be >= 1");
}

std::vector<SweepRow> run_power_sweep(const SweepSpec& spec, int workers) {
    if (spec.kind != SweepKind::power)
        throw std::invalid_argument("run_power_sweep: spec.kind mismatch");
    return run_sweep(spec, workers);
}

std::vector<SweepRow> run_distance_sweep(const SweepSpec& spec, int workers) {
    if (spec.kind != SweepKind::distance)
        throw std::invalid_argument("run_distance_sweep: spec.kind mismatch");
    return run_sweep(spec, workers);
}

void write_csv(const std::vector<SweepRow>& rows,
               const std::filesystem::path& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw std::runtime_error("write_csv: cannot open " + path.string());

    std::vector<SweepRow> sorted = rows;
    std::sort(sorted.begin(), sorted.end(), [](const SweepRow& a,
                                               const SweepRow& b) {
        if (a.protocol != b.protocol)
            return static_cast<int>(a.protocol) < static_cast<int>(b.protocol);
        if (a.mu != b.mu) return a.mu < b.mu;
        return a.sweep_value < b.sweep_value;
    });

    out << "sweep_value,mu,protocol,mean_throughput,std_error,n,seed\n";
    char buf[256];
    for (const SweepRow& r : sorted) {
        std::snprintf(buf, sizeof buf, "%.17g,%.17g,%s,%.17g,%.17g,%d,%llu\n",
                      r.sweep_value, r.mu, to_string(r.protocol),
                      r.mean_throughput, r.std_error, r.n,
                      static_cast<unsigned long long>(r.seed));
        out << buf;
    }
    out.flush();
    if (!out)
        throw std::runtime_error("write_csv: write failed for " +
                                 path.string());
}

std::vector<SweepRow> read_csv(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in)
        throw std::runtime_error("read_csv: cannot open " + path.string());

    std::string line;
    if (!std::getline(in, line) ||
        line != "sweep_value,mu,protocol,mean_throughput,std_error,n,seed")
        throw std::runtime_error("read_csv: bad header in " + path.string());

    std::vector<SweepRow> rows;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        std::istringstream ss(line);
        std::string field;
        SweepRow r;
        auto next = [&]() {
            if (!std::getline(ss, field, ','))
                throw std::runtime_error("read_csv: short row in " +
                                         path.string());
            return field;
        };
        r.sweep_value = std::stod(next());
        r.mu = std::stod(next());
        const std::string proto = next();
        if (proto == "EC")
            r.protocol = Protocol::EC;
        else if (proto == "DC")
            r.protocol = Protocol::DC;
        else
            throw std::runtime_error("read_csv: unknown protocol " + proto);
        r.mean_throughput = std::stod(next());
        r.std_error = std::stod(next());
        r.n = std::stoi(next());
        r.seed = std::stoull(next());
        rows.push_back(r);
    }
    return rows;
}

} // namespace wpcn
