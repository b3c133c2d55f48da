#ifndef NETSAMPLE_LEDGER_HPP
#define NETSAMPLE_LEDGER_HPP

#include <limits>
#include <random>

namespace netsample {

// Query accounting for one sampling run. Crawl queries cost 1; a UNI hit
// costs `uni_cost` attempts (deterministic mode) or a geometric number of
// attempts with that mean (stochastic mode).
class CostLedger {
public:
    static constexpr double kUnlimited = std::numeric_limits<double>::infinity();

    explicit CostLedger(double budget = kUnlimited, double uni_cost = 1.0,
                        bool stochastic_uni = false)
        : budget_(budget), uni_cost_(uni_cost), stochastic_uni_(stochastic_uni) {}

    double budget() const { return budget_; }
    double uni_cost() const { return uni_cost_; }
    double spent_crawl() const { return spent_crawl_; }
    double spent_uni_attempts() const { return spent_uni_; }
    double total_spent() const { return spent_crawl_ + spent_uni_; }
    double remaining() const { return budget_ - total_spent(); }

    bool can_afford(double amount) const { return total_spent() + amount <= budget_; }

    // Charges one crawl query; returns false (and charges nothing) when the
    // budget cannot cover it.
    bool try_charge_crawl() {
        if (!can_afford(1.0)) return false;
        spent_crawl_ += 1.0;
        return true;
    }

    // Charges the attempts behind one delivered UNI sample.
    bool try_charge_uni(std::mt19937_64& rng) {
        double cost = uni_cost_;
        if (stochastic_uni_) {
            // Geometric with mean uni_cost (success probability 1/c).
            std::geometric_distribution<long> geo(1.0 / uni_cost_);
            cost = static_cast<double>(geo(rng) + 1);
        }
        if (!can_afford(cost)) return false;
        spent_uni_ += cost;
        return true;
    }

private:
    double budget_;
    double uni_cost_;
    bool stochastic_uni_;
    double spent_crawl_ = 0.0;
    double spent_uni_ = 0.0;
};

}  // namespace netsample

#endif
