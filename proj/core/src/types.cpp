#include "ransomgame/types.hpp"

#include <cmath>

namespace ransomgame {

namespace {

void require(bool ok, const std::string& msg) {
    if (!ok) throw DomainError(msg);
}

bool finite(double x) { return std::isfinite(x); }

}  // namespace

void validate(const GroupParams& g, const std::string& label) {
    require(finite(g.wealth) && g.wealth >= 0.0, label + ".wealth must be finite and >= 0");
    require(finite(g.failure_loss) && g.failure_loss > 0.0, label + ".failure_loss must be > 0");
    require(finite(g.ransom_loss) && g.ransom_loss > 0.0, label + ".ransom_loss must be > 0");
    require(finite(g.interruption_loss) && g.interruption_loss >= 0.0,
            label + ".interruption_loss must be >= 0");
}

void validate(const GlobalParams& g) {
    require(finite(g.discount) && g.discount > 0.0 && g.discount <= 1.0,
            "discount must be in (0, 1]");
    require(finite(g.base_difficulty) && g.base_difficulty > 0.0, "base_difficulty must be > 0");
    require(finite(g.backup_unit_cost) && g.backup_unit_cost > 0.0,
            "backup_unit_cost must be > 0");
    require(finite(g.attack_unit_cost) && g.attack_unit_cost > 0.0,
            "attack_unit_cost must be > 0");
    require(finite(g.dev_cost) && g.dev_cost >= 0.0, "dev_cost must be >= 0");
}

void validate(const DefenderProfile& d) {
    require(finite(d.backup_1) && d.backup_1 > 0.0, "backup_1 must be > 0");
    require(finite(d.backup_2) && d.backup_2 > 0.0, "backup_2 must be > 0");
}

void validate(const AttackerStrategy& a) {
    require(finite(a.effort_1) && a.effort_1 >= 0.0, "effort_1 must be >= 0");
    require(finite(a.effort_2) && a.effort_2 >= 0.0, "effort_2 must be >= 0");
    require(finite(a.ransom) && a.ransom >= 0.0, "ransom must be >= 0");
}

}  // namespace ransomgame
