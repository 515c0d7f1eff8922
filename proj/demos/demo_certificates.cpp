// Certificates end to end: decide an instance, print its witness in compact
// run notation, verify it independently, and show the run-structure
// statistics; then do the same for a palindromic pair with its half form.

#include "vdw/certificate.hpp"
#include "vdw/cnf.hpp"
#include "vdw/dpll.hpp"
#include "vdw/numbers.hpp"

#include <cstdio>
#include <string>

int main() {
    // A maximal good partition for (3,6): length w(2;3,6) - 1 = 31.
    vdw::CnfFormula f = vdw::encode_vdw(3, 6, 31);
    vdw::DpllSolver solver(f);
    vdw::SolveResult r = solver.solve();
    std::string bits(f.num_vars, '0');
    for (int v = 1; v <= f.num_vars; ++v)
        if (r.witness[v] > 0) bits[v - 1] = '1';
    std::printf("(3,6) at n=31: %s\n", vdw::to_string(r.verdict));
    std::printf("  witness  %s\n", bits.c_str());
    std::printf("  compact  %s\n", vdw::emit_compact(bits).c_str());
    std::printf("  verified %s\n",
                vdw::verify_good(bits, 3, 6) ? "NO" : "good partition");

    vdw::CertificateStats s = vdw::compute_stats(bits);
    std::printf("  zeros %lld  ones %lld  adjacent zero pairs %lld\n", s.n0,
                s.n1, s.n00);
    auto quint = vdw::stats_quintuple(s);
    std::printf("  summary quintuple: ");
    for (const auto& pair : quint)
        std::printf("[%lld,%lld]", pair[0], pair[1]);
    std::printf("\n\n");

    // Palindromic boundary certificates for (3,5), re-verified end to end.
    vdw::PdResult pd = vdw::compute_pd(3, 5);
    vdw::PdCertBundle bundle = vdw::certify_pd(pd);
    std::printf("pd(2;3,5) = (%lld,%lld), certified %s\n", pd.p, pd.q,
                bundle.complete ? "completely" : "incompletely");
    std::printf("  half at n=%lld: %s\n", pd.p - 1,
                vdw::emit_compact(pd.half_p_minus_1).c_str());
    std::printf("  full at n=%lld: %s\n", pd.p - 1,
                vdw::emit_compact(bundle.partition_p).c_str());
    std::printf("  full at n=%lld: %s\n", pd.q - 1,
                vdw::emit_compact(bundle.partition_q).c_str());
    return 0;
}
