use serde_json::{json, Value};

use covdeg::{Block, Covering, DegreeTable, GammaMap, NeighborhoodMap, RelationEdges, Universe};

pub fn json_line(value: Value) -> String {
    let mut out = serde_json::to_string_pretty(&value).expect("rendered values are plain data");
    out.push('\n');
    out
}

fn name_list(u: &Universe, b: Block) -> Vec<String> {
    u.block_names(b)
}

fn block_rows(c: &Covering) -> Vec<Vec<String>> {
    c.blocks()
        .iter()
        .map(|&b| name_list(c.universe(), b))
        .collect()
}

pub fn neighborhoods_text(map: &NeighborhoodMap) -> String {
    let mut out = String::new();
    for (i, &n) in map.blocks().iter().enumerate() {
        out.push_str(&format!(
            "{} : {}\n",
            map.universe().name(i),
            name_list(map.universe(), n).join(" ")
        ));
    }
    out
}

pub fn neighborhoods_json(map: &NeighborhoodMap) -> Value {
    json!({
        "universe": map.universe().elements(),
        "neighborhoods": map
            .blocks()
            .iter()
            .enumerate()
            .map(|(i, &n)| {
                json!({
                    "element": map.universe().name(i),
                    "neighborhood": name_list(map.universe(), n),
                })
            })
            .collect::<Vec<_>>(),
    })
}

pub fn relation_text(r: &RelationEdges) -> String {
    let mut out = String::new();
    for (x, y) in r.pair_names() {
        out.push_str(&format!("({x},{y})\n"));
    }
    out
}

pub fn relation_json(r: &RelationEdges) -> Value {
    json!({
        "universe": r.universe().elements(),
        "pairs": r.pair_names(),
    })
}

pub fn gamma_text(map: &GammaMap) -> String {
    let mut out = String::new();
    for (i, g) in map.entries().iter().enumerate() {
        let rhs = match g {
            Some(b) => name_list(map.universe(), *b).join(" "),
            None => "-".to_owned(),
        };
        out.push_str(&format!("{} : {rhs}\n", map.universe().name(i)));
    }
    out
}

pub fn gamma_json(map: &GammaMap) -> Value {
    json!({
        "universe": map.universe().elements(),
        "gamma": map
            .entries()
            .iter()
            .enumerate()
            .map(|(i, g)| {
                json!({
                    "element": map.universe().name(i),
                    "block": g.map(|b| name_list(map.universe(), b)),
                })
            })
            .collect::<Vec<_>>(),
    })
}

pub fn reduct_text(report: &covdeg::ReductReport) -> String {
    let u = report.reduct.universe();
    let mut out = format!("# universe: {}\n", u.elements().join(" "));
    out.push_str("reduct:\n");
    for &b in report.reduct.blocks() {
        out.push_str(&format!("{}\n", name_list(u, b).join(" ")));
    }
    out.push_str("removed:\n");
    for &b in &report.removed {
        out.push_str(&format!("{}\n", name_list(u, b).join(" ")));
    }
    let verdict = if report.cov_equals_reduct {
        "cov==reduct: yes".to_owned()
    } else {
        let witness = report.gamma_witness.as_deref().unwrap_or("?");
        format!("cov==reduct: no (witness: {witness})")
    };
    out.push_str(&verdict);
    out.push('\n');
    out
}

pub fn reduct_json(report: &covdeg::ReductReport) -> Value {
    let u = report.reduct.universe();
    json!({
        "universe": u.elements(),
        "reduct": block_rows(&report.reduct),
        "removed": report.removed.iter().map(|&b| name_list(u, b)).collect::<Vec<_>>(),
        "cov_equals_reduct": report.cov_equals_reduct,
        "gamma_witness": report.gamma_witness,
    })
}

pub fn degree_table_json(t: &DegreeTable) -> Value {
    json!({
        "universe": t.universe().elements(),
        "window": t.window(),
        "entries": t
            .entries()
            .iter()
            .map(|&(b, v)| json!({"set": name_list(t.universe(), b), "degree": v}))
            .collect::<Vec<_>>(),
    })
}

pub fn covering_json(c: &Covering) -> Value {
    json!({
        "universe": c.universe().elements(),
        "blocks": block_rows(c),
    })
}

pub fn same_text(relation: bool, cov: bool, p: bool, witness: Option<&str>) -> String {
    let word = |b: bool| if b { "equal" } else { "different" };
    let suffix = match witness {
        Some(x) => format!(" (witness: {x})"),
        None => String::new(),
    };
    format!(
        "relation: {}, cov: {}, P: {}{suffix}\n",
        word(relation),
        word(cov),
        word(p)
    )
}

pub fn same_json(relation: bool, cov: bool, p: bool, witness: Option<&str>) -> Value {
    json!({
        "relation_equal": relation,
        "cov_equal": cov,
        "p_equal": p,
        "witness": witness,
    })
}

pub fn parity_text(pair: &covdeg::ParityPair) -> String {
    let u = pair.even.universe();
    let mut out = format!("# universe: {}\n", u.elements().join(" "));
    out.push_str("even:\n");
    for &b in pair.even.blocks() {
        out.push_str(&format!("{}\n", name_list(u, b).join(" ")));
    }
    out.push_str("odd:\n");
    for &b in pair.odd.blocks() {
        out.push_str(&format!("{}\n", name_list(u, b).join(" ")));
    }
    out
}

pub fn parity_json(pair: &covdeg::ParityPair) -> Value {
    json!({
        "universe": pair.even.universe().elements(),
        "even": block_rows(&pair.even),
        "odd": block_rows(&pair.odd),
    })
}
