// Ranks a handful of candidate projects by the model performance each one
// demands, using the library directly.

#include <cstdio>

#include "minviable/minviable.hpp"

int main() {
    struct Candidate {
        const char* name;
        minviable::BusinessCase bc;
    };
    const Candidate candidates[] = {
        {"churn save",      {250000, 0.02, 180.0, 12.0, 250000}},
        {"fraud intercept", {1000000, 0.001, 900.0, 25.0, 400000}},
        {"lead scoring",    {50000, 0.08, 60.0, 8.0, 120000}},
        {"triage routing",  {2000000, 0.0005, 45.0, 30.0, 500000}},
    };

    std::printf("%-16s %-10s %8s %8s %10s %12s\n", "project", "feasible",
                "min AUC", "recall", "precision", "simplicity");
    for (const Candidate& c : candidates) {
        const minviable::MinViableResult r =
            minviable::find_min_viable_model(c.bc);
        if (r.feasible) {
            std::printf("%-16s %-10s %8.4f %8.4f %10.4f %12.6f\n", c.name,
                        "yes", *r.auc, *r.recall, *r.precision, r.simplicity);
        } else {
            std::printf("%-16s %-10s %8s %8s %10s %12.6f\n", c.name, "no",
                        "-", "-", "-", r.simplicity);
        }
    }
    return 0;
}
