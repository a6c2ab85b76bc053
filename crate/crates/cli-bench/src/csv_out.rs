use grover_sampler::{SampleRun, SweepRow};

/// Points CSV: one row per accepted point, cumulative query ledger included.
pub fn points_csv(run: &SampleRun) -> String {
    let mut out = String::from("index,x,y,retries,oracle_calls_cumulative\n");
    for (i, rec) in run.records.iter().enumerate() {
        out.push_str(&format!(
            "{i},{},{},{},{}\n",
            rec.point.x, rec.point.y, rec.retries, rec.cumulative_oracle_calls
        ));
    }
    out
}

/// Stats CSV: a single summary row for the run.
pub fn stats_csv(run: &SampleRun, p_exact: f64, p_estimate: f64, iterations: u32) -> String {
    let s = &run.stats;
    format!(
        "backend,p_exact,p_estimate,R,shots,oracle_calls,mean_calls_per_point\n{},{},{},{},{},{},{}\n",
        run.backend, p_exact, p_estimate, iterations, s.shots, s.oracle_calls, s.mean_calls_per_point
    )
}

/// Bench CSV: one row per swept scene, empirical means next to the analytic
/// curves M/p and (R+1)M.
pub fn bench_csv(rows: &[SweepRow]) -> String {
    let mut out =
        String::from("p,classical_empirical,quantum_empirical,classical_analytic,quantum_analytic\n");
    for row in rows {
        out.push_str(&format!(
            "{},{},{},{},{}\n",
            row.p, row.classical_mean, row.quantum_mean, row.classical_analytic, row.quantum_analytic
        ));
    }
    out
}
