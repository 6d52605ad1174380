use gm_analyzer::GMReport;
use scheme::Scheme;
use spectra::SchemeEigenmatrix;

fn yn(v: Option<bool>) -> &'static str {
    match v {
        Some(true) => "Yes",
        Some(false) => "No",
        None => "-",
    }
}

pub fn scheme_summary(doc: &Scheme) -> String {
    let mut out = format!(
        "{}: degree {}, |Ω| = {}, |H| = {}, rank {}, multiplicity-free {}\n",
        doc.id, doc.degree, doc.domain_size, doc.stabilizer_order, doc.rank, doc.multiplicity_free
    );
    if let Some(c) = doc.commutative {
        out.push_str(&format!("commutative {c}\n"));
    }
    out.push_str(&format!("{:<5} {:<12} {:>9} {:>7}\n", "index", "orbital", "valency", "paired"));
    for o in &doc.orbitals {
        out.push_str(&format!("{:<5} {:<12} {:>9} {:>7}\n", o.index, o.label, o.valency, o.paired));
    }
    let modules: Vec<String> = doc.modules.iter().map(|m| format!("{}^{}", m.partition, m.multiplicity)).collect();
    out.push_str(&format!("modules {}\n", modules.join(" + ")));
    out
}

pub fn eigenmatrix(m: &SchemeEigenmatrix) -> String {
    let width = m.entries.iter().flatten().map(|q| q.to_string().len()).chain(m.labels.iter().map(String::len)).max().unwrap_or(1) + 1;
    let lam_w = m.partitions.iter().map(|p| p.to_string().len()).max().unwrap_or(1).max(6) + 1;
    let mut out = format!("{:<lam_w$} {:>8}", "λ", "dim");
    for l in &m.labels {
        out.push_str(&format!(" {l:>width$}"));
    }
    out.push('\n');
    for (r, p) in m.partitions.iter().enumerate() {
        out.push_str(&format!("{:<lam_w$} {:>8}", p.to_string(), m.multiplicities[r]));
        for q in &m.entries[r] {
            out.push_str(&format!(" {:>width$}", q.to_string()));
        }
        out.push('\n');
    }
    out
}

pub fn gm_report(r: &GMReport) -> String {
    let lams: Vec<String> = r.lambda_set.iter().map(ToString::to_string).collect();
    let mut out = format!("{}: degree {}, |Ω| = {}, rank {}\nΛ = {{{}}}\n", r.scheme, r.degree, r.domain_size, r.rank, lams.join(", "));
    match (&r.chosen, &r.ambiguity) {
        (Some(l), _) => out.push_str(&format!("second largest {l}\n")),
        (None, Some(a)) => out.push_str(&format!("{a}\n")),
        _ => {}
    }
    for a in &r.analyses {
        if let Some(f) = &a.failure {
            out.push_str(&format!("\nλ = {}: {f}\n", a.lambda));
            continue;
        }
        let (s, t) = a.orbit_sizes.unwrap_or((0, 0));
        out.push_str(&format!("\nλ = {}: |S| = {s}, |Ω \\ S| = {t}\n", a.lambda));
        out.push_str(&format!(
            "{:<12} {:>8} {:>6} {:>9} {:>10} {:>10} {:<18} {:>5} {:>6}\n",
            "orbital", "valency", "a_i", "coclique", "ξ_λ", "least", "afforded by", "(b)", "tight"
        ));
        for o in &a.orbitals {
            let by: Vec<String> = o.least_afforded_by.iter().map(ToString::to_string).collect();
            out.push_str(&format!(
                "{:<12} {:>8} {:>6} {:>9} {:>10} {:>10} {:<18} {:>5} {:>6}\n",
                o.label,
                o.valency,
                o.a,
                if o.coclique { "yes" } else { "no" },
                o.xi_lambda.to_string(),
                o.least_eigenvalue.to_string(),
                by.join(" "),
                yn(o.part_b),
                yn(o.ratio_tight)
            ));
        }
        out.push_str(&format!(
            "(a) {}  (b) every coclique orbital: {}  some coclique orbital: {}\n",
            yn(a.part_a),
            yn(a.part_b_every),
            yn(a.part_b_some)
        ));
    }
    if r.chosen.is_some() {
        out.push_str(&format!(
            "\npart (a): {}\npart (b): {} (some: {})\n",
            yn(r.part_a),
            yn(r.part_b_every),
            yn(r.part_b_some)
        ));
    }
    out
}
