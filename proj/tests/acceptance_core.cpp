// Criteria 1-5 linked against the core library only; criterion 9 is that they pass here.
#include "acceptance_checks.hpp"

int main() {
    acceptance::Report report;
    const bool ok = acceptance::run_property_suite(report);
    report.run(9, "criteria 1-5 pass without the solver library", 1e9, [ok] {
        acceptance::Outcome o;
        o.require(ok, "a property criterion failed");
        return o;
    });
    return report.all() ? 0 : 1;
}
