//! Exhaustive enumeration of the forbidden families.
//!
//! Every minimal forbidden graph is its hub-free side plus a dominating
//! hub, so the engine enumerates hub-free sides. A member on `n`
//! vertices has maximum degree `n - 1` through the hub and parameter
//! value `n - k - 1`; the hub contributes one unit to each, so the
//! hub-free side `H` on `m = n - 1` vertices has parameter exactly
//! `m - k - 1`. That value is at least one, and twice the member's
//! parameter minus two never exceeds its maximum degree, which confines
//! `m` to `k + 2 ..= 2k + 2`. The engine streams all isomorphism
//! classes up to order `2k + 1`, tests each directly, and grows the
//! final order from the streamed frontier itself, filtering children
//! cheaply before the expensive acceptance check.

use std::collections::BTreeMap;
use std::fs;
use std::path::Path;

use graph_core::{graph6, Graph, VertexSet};
use invariants::{has_clique_of_size, is_q_colorable};
use iso::CanonicalForm;
use rayon::prelude::*;

use crate::conditions::{hub_free_member, second_condition};
use crate::family::ForbiddenFamily;
use crate::files::write_atomic;
use crate::{ForbiddenError, Parameter};

/// Largest supported gap: the hub-free side then reaches order
/// `2 * MAX_GAP + 2 = 10`, within the generation budget.
pub const MAX_GAP: usize = 4;

/// Parents per checkpoint shard of a resumable run.
const SHARD_PARENTS: usize = 2048;

/// Enumerates the complete family of minimal forbidden graphs for the
/// gap-`k` class of `p`, entirely in memory.
pub fn enumerate_family(p: Parameter, k: usize) -> Result<ForbiddenFamily, ForbiddenError> {
    run(p, k, None)
}

/// Like [`enumerate_family`], but checkpoints the terminal level into
/// `dir`, one file per shard of parents. A rerun with the same
/// arguments skips finished shards, so an interrupted run resumes
/// where it stopped. The directory must be empty or belong to a
/// previous run with identical arguments.
pub fn enumerate_family_resumable(
    p: Parameter,
    k: usize,
    dir: &Path,
) -> Result<ForbiddenFamily, ForbiddenError> {
    run(p, k, Some(dir))
}

fn run(p: Parameter, k: usize, checkpoint: Option<&Path>) -> Result<ForbiddenFamily, ForbiddenError> {
    if k > MAX_GAP {
        return Err(ForbiddenError::UnsupportedGap { k, max: MAX_GAP });
    }
    let frontier_order = 2 * k + 1;
    let target = k + 1;

    // Hub-free sides have parameter at most k + 1, and the parameter
    // never drops when vertices are added, so subtrees beyond that
    // bound contain no members and are pruned.
    let chi_keep = move |g: &Graph| is_q_colorable(g, k + 1);
    let omega_keep = move |g: &Graph| !has_clique_of_size(g, k + 2);
    let keep: &(dyn Fn(&Graph) -> bool + Sync) = match p {
        Parameter::Chi => &chi_keep,
        Parameter::Omega => &omega_keep,
    };

    let mut members: BTreeMap<CanonicalForm, Graph> = BTreeMap::new();
    let mut frontier: Vec<Graph> = Vec::new();
    iso::stream_nonisomorphic(frontier_order, keep, &mut |h| {
        if h.n() == frontier_order && keep(h) {
            frontier.push(*h);
        }
        if h.n() >= k + 2 && hub_free_member(p, k, h) {
            insert_member(&mut members, h);
        }
    })?;

    match checkpoint {
        None => {
            for entry in compute_shard(p, target, &frontier)? {
                let (form, g) = entry;
                members.insert(form, g);
            }
        }
        Some(dir) => {
            fs::create_dir_all(dir)?;
            reconcile_params_file(dir, p, k, frontier.len())?;
            for (index, shard) in frontier.chunks(SHARD_PARENTS).enumerate() {
                let path = dir.join(format!("shard_{index:04}.g6"));
                let entries = if path.exists() {
                    load_shard(&path)?
                } else {
                    let computed = compute_shard(p, target, shard)?;
                    store_shard(&path, &computed)?;
                    computed
                };
                for (form, g) in entries {
                    members.insert(form, g);
                }
            }
        }
    }

    Ok(ForbiddenFamily::from_parts(
        p,
        k,
        members,
        (k + 3, 2 * k + 3),
        env!("CARGO_PKG_VERSION").to_string(),
    ))
}

/// Adds the member with hub-free side `h` under its canonical form.
fn insert_member(members: &mut BTreeMap<CanonicalForm, Graph>, h: &Graph) {
    let g = h
        .add_dominating_vertex()
        .expect("members stay within vertex capacity");
    let form = iso::canonical_form(&g).expect("members stay within the canonical budget");
    members.insert(form, form.to_graph());
}

/// Terminal-level members arising from a slice of frontier parents,
/// sorted by canonical form. Each isomorphism class of children is
/// delivered by exactly one parent, so shards never overlap.
fn compute_shard(
    p: Parameter,
    target: usize,
    parents: &[Graph],
) -> Result<Vec<(CanonicalForm, Graph)>, ForbiddenError> {
    let broods: Result<Vec<Vec<(CanonicalForm, Graph)>>, ForbiddenError> = parents
        .par_iter()
        .map(|parent| terminal_children(p, target, parent))
        .collect();
    let mut flat: Vec<(CanonicalForm, Graph)> = broods?.into_iter().flatten().collect();
    flat.sort_unstable_by_key(|(form, _)| *form);
    Ok(flat)
}

/// Members among the one-vertex extensions of `parent`.
fn terminal_children(
    p: Parameter,
    target: usize,
    parent: &Graph,
) -> Result<Vec<(CanonicalForm, Graph)>, ForbiddenError> {
    let t = parent.n();
    // The new vertex raises the parameter by at most one, so only
    // parents at the target or one short of it can yield children
    // sitting exactly at the target; knowing which side the parent is
    // on turns the child's exact parameter test into one decision.
    let parent_value = p.value(parent)?;
    let must_reach = if parent_value == target {
        false
    } else if parent_value + 1 == target {
        true
    } else {
        return Ok(Vec::new());
    };

    let full: u32 = (1u32 << t) - 1;
    // Attaching the new vertex to an all-adjacent old vertex would make
    // that vertex dominating; attaching it to everything would make the
    // new vertex dominating.
    let blocked: u32 = (0..t)
        .filter(|&v| parent.degree(v) == t - 1)
        .fold(0, |acc, v| acc | 1 << v);
    let parent_edges = parent.edge_count();
    let min_edges = target * (target - 1) / 2;

    let mut out = Vec::new();
    let mut seen = Vec::new();
    for mask in 0..=full {
        if mask == full || mask & blocked != 0 {
            continue;
        }
        if parent_edges + (mask.count_ones() as usize) < min_edges {
            continue;
        }
        let child = parent
            .add_vertex(VertexSet::from_bits(mask))
            .expect("terminal level stays within vertex capacity");
        debug_assert!(!child.has_dominating_vertex());
        let at_target = match (p, must_reach) {
            (Parameter::Chi, false) => is_q_colorable(&child, target),
            (Parameter::Chi, true) => !is_q_colorable(&child, target - 1),
            (Parameter::Omega, false) => !has_clique_of_size(&child, target + 1),
            (Parameter::Omega, true) => has_clique_of_size(&child, target),
        };
        if !at_target || !second_condition(p, &child, target) {
            continue;
        }
        if let Some(h_form) = iso::extension_form(&child)? {
            // Distinct attachment sets can still give isomorphic
            // children of the same parent.
            if seen.contains(&h_form) {
                continue;
            }
            seen.push(h_form);
            let g = child
                .add_dominating_vertex()
                .expect("members stay within vertex capacity");
            let form = iso::canonical_form(&g)?;
            out.push((form, form.to_graph()));
        }
    }
    Ok(out)
}

/// Creates or validates the checkpoint parameter file. Shard files are
/// only meaningful for the run that produced them, so any disagreement
/// aborts instead of silently mixing results.
fn reconcile_params_file(
    dir: &Path,
    p: Parameter,
    k: usize,
    parent_count: usize,
) -> Result<(), ForbiddenError> {
    let path = dir.join("params.txt");
    let expected = format!(
        "parameter={}\nk={}\nshard_parents={}\nparent_count={}\nengine_version={}\n",
        p.name(),
        k,
        SHARD_PARENTS,
        parent_count,
        env!("CARGO_PKG_VERSION"),
    );
    if path.exists() {
        let found = fs::read_to_string(&path)?;
        if found != expected {
            return Err(ForbiddenError::Checkpoint {
                message: format!(
                    "{} belongs to a different run; remove the directory to start over",
                    path.display()
                ),
            });
        }
    } else {
        write_atomic(&path, &expected)?;
    }
    Ok(())
}

fn store_shard(path: &Path, entries: &[(CanonicalForm, Graph)]) -> Result<(), ForbiddenError> {
    let mut body = String::new();
    for (_, g) in entries {
        body.push_str(&graph6::encode(g));
        body.push('\n');
    }
    write_atomic(path, &body)
}

fn load_shard(path: &Path) -> Result<Vec<(CanonicalForm, Graph)>, ForbiddenError> {
    let text = fs::read_to_string(path)?;
    let mut entries = Vec::new();
    for (i, line) in text.lines().enumerate() {
        let g = graph6::decode(line).map_err(|e| ForbiddenError::FileFormat {
            line: i + 1,
            message: format!("{}: {e}", path.display()),
        })?;
        let form = iso::canonical_form(&g)?;
        entries.push((form, form.to_graph()));
    }
    Ok(entries)
}
