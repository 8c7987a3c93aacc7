//! Grid sweeps over (n, epsilon, beta) and their rendering.
//!
//! The two presets reproduce the published comparison tables: table1
//! holds the L2-L2 methods (exact solution, the Poisson-tail search, and
//! the classic MGF bound), table2 the L2-L1 methods (subgaussian constant
//! bound and the optimized-Chernoff bound). The published table2 lists
//! the row label "eps = .1, beta = 2" twice per n block; the second
//! occurrence is reproduced as eps = .3, beta = 2, which is what its
//! printed values correspond to, and the row carries the original label
//! in `source_label`.

use rayon::prelude::*;

use jlrp::bounds::{
    dg_bound, exact_bound, matousek_bound, theorem1_bound, theorem3_bound, BoundQuery,
    PRESET_BETA, PRESET_EPSILON, PRESET_N,
};
use jlrp::Result;

#[derive(Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Markdown,
    Csv,
    Json,
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum Which {
    Table1,
    Table2,
    Custom,
}

pub struct TableRequest {
    which: Which,
    n_values: Vec<u64>,
    epsilon_values: Vec<f64>,
    beta_values: Vec<f64>,
}

impl TableRequest {
    pub fn table1() -> Self {
        TableRequest {
            which: Which::Table1,
            n_values: PRESET_N.to_vec(),
            epsilon_values: PRESET_EPSILON.to_vec(),
            beta_values: PRESET_BETA.to_vec(),
        }
    }

    pub fn table2() -> Self {
        TableRequest {
            which: Which::Table2,
            ..TableRequest::table1()
        }
    }

    pub fn custom(n_values: Vec<u64>, epsilon_values: Vec<f64>, beta_values: Vec<f64>) -> Self {
        TableRequest {
            which: Which::Custom,
            n_values,
            epsilon_values,
            beta_values,
        }
    }
}

struct Cell {
    n: u64,
    epsilon: f64,
    beta: f64,
    exact: Option<u64>,
    theorem1: Option<u64>,
    dg: Option<u64>,
    matousek: Option<u64>,
    theorem3: Option<u64>,
    source_label: Option<String>,
}

pub struct Rendered {
    pub body: String,
    pub notes: Vec<String>,
}

pub fn render(request: &TableRequest, format: Format) -> Result<Rendered> {
    let mut grid = Vec::new();
    for &n in &request.n_values {
        for &beta in &request.beta_values {
            for &epsilon in &request.epsilon_values {
                grid.push((n, epsilon, beta));
            }
        }
    }
    // Preset row order follows the published blocks: beta varies slower
    // than epsilon within each n. The loop above yields exactly that.

    let which = request.which;
    let cells: Result<Vec<Cell>> = grid
        .par_iter()
        .map(|&(n, epsilon, beta)| compute_cell(which, n, epsilon, beta))
        .collect();
    let cells = cells?;

    let mut notes = Vec::new();
    if which == Which::Table2 {
        notes.push(
            "the published table lists 'eps = .1, beta = 2' twice per n block; the second \
             occurrence is reproduced here as eps = .3, beta = 2, which matches its printed \
             values (rows carry the original label in source_label)"
                .to_string(),
        );
    }

    let body = match format {
        Format::Markdown => render_markdown(which, &cells),
        Format::Csv => render_csv(which, &cells),
        Format::Json => render_json(which, &cells, &notes),
    };
    Ok(Rendered { body, notes })
}

fn compute_cell(which: Which, n: u64, epsilon: f64, beta: f64) -> Result<Cell> {
    let query = BoundQuery::new(n, epsilon, beta)?;
    let l2l2 = matches!(which, Which::Table1 | Which::Custom);
    let l2l1 = matches!(which, Which::Table2 | Which::Custom);
    let source_label = (which == Which::Table2 && epsilon == 0.3 && beta == 2.0)
        .then(|| "eps = .1, beta = 2".to_string());
    Ok(Cell {
        n,
        epsilon,
        beta,
        exact: if l2l2 { Some(exact_bound(&query)?.k) } else { None },
        theorem1: if l2l2 {
            Some(theorem1_bound(&query)?.k)
        } else {
            None
        },
        dg: if l2l2 { Some(dg_bound(&query).k) } else { None },
        matousek: if l2l1 { Some(matousek_bound(&query).k) } else { None },
        theorem3: if l2l1 {
            Some(theorem3_bound(&query)?.k)
        } else {
            None
        },
        source_label,
    })
}

fn reduction(smaller: Option<u64>, larger: Option<u64>) -> Option<f64> {
    match (smaller, larger) {
        (Some(s), Some(l)) if l > 0 => Some(1.0 - s as f64 / l as f64),
        _ => None,
    }
}

fn columns(which: Which) -> Vec<&'static str> {
    let mut cols = vec!["n", "epsilon", "beta"];
    match which {
        Which::Table1 => cols.extend(["exact", "theorem1", "dg", "reduction"]),
        Which::Table2 => cols.extend(["matousek", "theorem3", "reduction"]),
        Which::Custom => cols.extend([
            "exact",
            "theorem1",
            "dg",
            "matousek",
            "theorem3",
            "reduction_theorem1_vs_dg",
            "reduction_theorem3_vs_matousek",
        ]),
    }
    cols
}

fn format_opt_k(k: Option<u64>) -> String {
    k.map(|v| v.to_string()).unwrap_or_default()
}

fn format_opt_reduction(r: Option<f64>) -> String {
    r.map(|v| format!("{v:.4}")).unwrap_or_default()
}

fn row_strings(which: Which, cell: &Cell) -> Vec<String> {
    let mut row = vec![
        cell.n.to_string(),
        cell.epsilon.to_string(),
        cell.beta.to_string(),
    ];
    match which {
        Which::Table1 => {
            row.push(format_opt_k(cell.exact));
            row.push(format_opt_k(cell.theorem1));
            row.push(format_opt_k(cell.dg));
            row.push(format_opt_reduction(reduction(cell.theorem1, cell.dg)));
        }
        Which::Table2 => {
            row.push(format_opt_k(cell.matousek));
            row.push(format_opt_k(cell.theorem3));
            row.push(format_opt_reduction(reduction(cell.theorem3, cell.matousek)));
        }
        Which::Custom => {
            row.push(format_opt_k(cell.exact));
            row.push(format_opt_k(cell.theorem1));
            row.push(format_opt_k(cell.dg));
            row.push(format_opt_k(cell.matousek));
            row.push(format_opt_k(cell.theorem3));
            row.push(format_opt_reduction(reduction(cell.theorem1, cell.dg)));
            row.push(format_opt_reduction(reduction(cell.theorem3, cell.matousek)));
        }
    }
    row
}

fn render_markdown(which: Which, cells: &[Cell]) -> String {
    let cols = columns(which);
    let mut out = String::new();
    out.push_str(&format!("| {} |\n", cols.join(" | ")));
    out.push_str(&format!("|{}\n", " --- |".repeat(cols.len())));
    for cell in cells {
        out.push_str(&format!("| {} |\n", row_strings(which, cell).join(" | ")));
    }
    out
}

fn render_csv(which: Which, cells: &[Cell]) -> String {
    let mut out = String::new();
    out.push_str(&columns(which).join(","));
    out.push('\n');
    for cell in cells {
        out.push_str(&row_strings(which, cell).join(","));
        out.push('\n');
    }
    out
}

fn render_json(which: Which, cells: &[Cell], notes: &[String]) -> String {
    let table_name = match which {
        Which::Table1 => "table1",
        Which::Table2 => "table2",
        Which::Custom => "custom",
    };
    let rows: Vec<serde_json::Value> = cells
        .iter()
        .map(|cell| {
            let mut obj = serde_json::Map::new();
            obj.insert("n".into(), cell.n.into());
            obj.insert("epsilon".into(), cell.epsilon.into());
            obj.insert("beta".into(), cell.beta.into());
            let mut put_k = |name: &str, v: Option<u64>| {
                if let Some(v) = v {
                    obj.insert(name.into(), v.into());
                }
            };
            put_k("exact", cell.exact);
            put_k("theorem1", cell.theorem1);
            put_k("dg", cell.dg);
            put_k("matousek", cell.matousek);
            put_k("theorem3", cell.theorem3);
            match which {
                Which::Table1 => {
                    obj.insert(
                        "reduction".into(),
                        reduction(cell.theorem1, cell.dg).into(),
                    );
                }
                Which::Table2 => {
                    obj.insert(
                        "reduction".into(),
                        reduction(cell.theorem3, cell.matousek).into(),
                    );
                }
                Which::Custom => {
                    obj.insert(
                        "reduction_theorem1_vs_dg".into(),
                        reduction(cell.theorem1, cell.dg).into(),
                    );
                    obj.insert(
                        "reduction_theorem3_vs_matousek".into(),
                        reduction(cell.theorem3, cell.matousek).into(),
                    );
                }
            }
            if let Some(label) = &cell.source_label {
                obj.insert("source_label".into(), label.clone().into());
            }
            serde_json::Value::Object(obj)
        })
        .collect();
    let payload = serde_json::json!({
        "schema_version": 1,
        "table": table_name,
        "rows": rows,
        "notes": notes,
    });
    let mut s = serde_json::to_string_pretty(&payload).expect("serializable");
    s.push('\n');
    s
}
