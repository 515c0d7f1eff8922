// Local-search lower-bound sweep: GSAT-TABU with warm starts walks n upward
// for progression lengths (3,9), printing one row per interval length until
// the flip budget runs out or the search stops finding good partitions.

#include "vdw/local_search.hpp"

#include <cstdio>

int main() {
    vdw::CampaignConfig cfg;
    cfg.scheme = vdw::LsScheme::GSAT_TABU;
    cfg.runs_per_n = 10;
    cfg.cutoff = 200000;
    cfg.seed = 2026;
    cfg.max_total_flips = 4000000;
    cfg.max_consecutive_failures = 1;

    std::printf("campaign for (3,9), starting at n = 60:\n");
    vdw::CampaignResult r = vdw::run_campaign(3, 9, 60, cfg);
    std::printf("%s", vdw::format_campaign(r).c_str());
    std::printf("best n reached: %d  =>  w(2;3,9) >= %d   (true value: 77)\n",
                r.best_n, r.lower_bound);
    std::printf("total flips: %lld\n", r.total_flips);
    return 0;
}
