#pragma once

#include "specix/partition.hpp"
#include "specix/pseries.hpp"
#include "specix/rational.hpp"

#include <functional>
#include <map>
#include <memory>
#include <string>
#include <utility>

namespace specix {

/// A total rule partition -> rational: the fix-count view fix F[lambda] of a
/// possibly virtual species. Ordinary species give nonnegative integers;
/// signed values encode virtual species. Carries a display name for
/// provenance output.
class fix_fn {
public:
    using rule = std::function<rational(const partition&)>;

private:
    std::string name_;
    rule fn_;

public:

    fix_fn() : name_("0"), fn_([](const partition&) { return rational(0); }) {}

    fix_fn(std::string name, rule fn) : name_(std::move(name)), fn_(std::move(fn)) {}

    rational operator()(const partition& lam) const { return fn_(lam); }

    const std::string& name() const { return name_; }

    static fix_fn constant(const rational& c) {
        return fix_fn("const " + rational_str(c), [c](const partition&) { return c; });
    }

    /// 1 on partitions of even weight, 0 otherwise — the closed-form
    /// loop-removal solution for the species of sets.
    static fix_fn even_weight() {
        return fix_fn("even-weight", [](const partition& lam) {
            return rational(lam.weight() % 2 == 0 ? 1 : 0);
        });
    }

    /// 1 exactly on partitions of weight k (fix E_k).
    static fix_fn weight_is(unsigned k) {
        return fix_fn("weight=" + std::to_string(k),
                      [k](const partition& lam) { return rational(lam.weight() == k ? 1 : 0); });
    }

    /// Extensional rule from a map, 0 outside the stored support.
    static fix_fn of_map(std::map<partition, rational, partition_less> values,
                         std::string name = "map") {
        auto ptr = std::make_shared<const std::map<partition, rational, partition_less>>(std::move(values));
        return fix_fn(std::move(name), [ptr](const partition& lam) {
            auto it = ptr->find(lam);
            return it == ptr->end() ? rational(0) : it->second;
        });
    }

    /// Fix counts of a stored series: z_lambda c_lambda, 0 beyond the bound.
    static fix_fn of_series(p_series f, std::string name = "series") {
        auto ptr = std::make_shared<const p_series>(std::move(f));
        return fix_fn(std::move(name),
                      [ptr](const partition& lam) { return fix_count(*ptr, lam); });
    }
};

inline fix_fn operator+(const fix_fn& a, const fix_fn& b) {
    return fix_fn(a.name() + " + " + b.name(),
                  [a, b](const partition& lam) { return a(lam) + b(lam); });
}

inline fix_fn operator-(const fix_fn& a, const fix_fn& b) {
    return fix_fn(a.name() + " - " + b.name(),
                  [a, b](const partition& lam) { return a(lam) - b(lam); });
}

inline fix_fn operator*(const rational& c, const fix_fn& a) {
    return fix_fn(rational_str(c) + "*(" + a.name() + ")",
                  [c, a](const partition& lam) { return c * a(lam); });
}

/// The bijection with series coefficients: fix F[lambda] = z_lambda c_lambda.
inline fix_fn fix_counts(const p_series& f) { return fix_fn::of_series(f); }

} // namespace specix
