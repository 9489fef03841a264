use std::fmt::Write;

use qcenter::blocks::CenterDimension;
use qcenter::{BlockCensus, HodgeDiamond};

pub fn diamond_md(d: &HodgeDiamond, per_weight: bool) -> String {
    let n = d.dim_x;
    let mut s = String::new();
    let levi = if d.levi.is_empty() {
        "{} (Borel)".to_string()
    } else {
        format!("{{{}}}", join(&d.levi))
    };
    let _ = writeln!(s, "{}{} levi {levi}, dim X = {n}\n", d.kind.letter(), d.rank);
    let mut header = vec!["h^{i,j}".to_string()];
    header.extend((0..=n).map(|c| format!("j-i={}", 2 * c)));
    let _ = writeln!(s, "| {} |", header.join(" | "));
    let _ = writeln!(s, "|{}", "---|".repeat(n + 2));
    for k in 0..=n {
        let mut row = vec![format!("j+i={}", 2 * k)];
        for c in 0..=n {
            row.push(if c > k {
                String::new()
            } else {
                let e = d.entry(k - c, k + c).expect("diamond is complete");
                if per_weight {
                    e.format_isotypes()
                } else {
                    e.dim.to_string()
                }
            });
        }
        let _ = writeln!(s, "| {} |", row.join(" | "));
    }
    let _ = writeln!(s, "\ntotal: {}", d.total);
    s
}

pub fn diamond_csv(d: &HodgeDiamond) -> String {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(["i", "j", "degree", "dim", "isotypes"]).unwrap();
    for e in &d.entries {
        w.write_record([
            e.i.to_string(),
            e.j.to_string(),
            e.degree.to_string(),
            e.dim.to_string(),
            e.format_isotypes(),
        ])
        .unwrap();
    }
    String::from_utf8(w.into_inner().unwrap()).unwrap()
}

pub fn census_md(c: &BlockCensus) -> String {
    let mut s = String::new();
    let _ = writeln!(
        s,
        "{}{} at l = {}: {} blocks over {} restricted weights\n",
        c.kind.letter(),
        c.rank,
        c.l,
        c.blocks,
        c.restricted_weights
    );
    let _ = writeln!(
        s,
        "| class | walls | levi | blocks | weights |\n|---|---|---|---|---|"
    );
    for k in &c.classes {
        let _ = writeln!(
            s,
            "| {} | {{{}}} | {} | {} | {} |",
            k.label,
            join(&k.walls),
            k.levi.as_ref().map_or("-".into(), |l| format!("{{{}}}", join(l))),
            k.count,
            k.weights
        );
    }
    s
}

pub fn census_csv(c: &BlockCensus) -> String {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(["class", "walls", "levi", "blocks", "weights"])
        .unwrap();
    for k in &c.classes {
        w.write_record([
            k.label.clone(),
            join(&k.walls),
            k.levi.as_ref().map_or(String::new(), |l| join(l)),
            k.count.to_string(),
            k.weights.to_string(),
        ])
        .unwrap();
    }
    String::from_utf8(w.into_inner().unwrap()).unwrap()
}

pub fn center_md(c: &CenterDimension) -> String {
    let mut s = census_md(&c.census);
    let _ = writeln!(s, "\n| class | blocks | block dim |\n|---|---|---|");
    for t in &c.terms {
        let _ = writeln!(s, "| {} | {} | {} |", t.label, t.count, t.block_dim);
    }
    let sum: Vec<String> = c
        .terms
        .iter()
        .map(|t| format!("{}·{}", t.block_dim, t.count))
        .collect();
    let _ = writeln!(s, "\ntotal: {} = {}", sum.join(" + "), c.total);
    if let Some(cat) = c.catalan {
        let _ = writeln!(s, "rational Catalan: {cat}");
    }
    s
}

pub fn center_csv(c: &CenterDimension) -> String {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(["class", "levi", "blocks", "block_dim"]).unwrap();
    for t in &c.terms {
        w.write_record([
            t.label.clone(),
            join(&t.levi),
            t.count.to_string(),
            t.block_dim.to_string(),
        ])
        .unwrap();
    }
    w.write_record(["total", "", "", &c.total.to_string()]).unwrap();
    String::from_utf8(w.into_inner().unwrap()).unwrap()
}

pub fn join<T: ToString>(v: &[T]) -> String {
    v.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",")
}
