//! Key sharing backed by greedy defining sets of Latin squares.
//!
//! The dealer holds an order-n Latin square as the key. For each authorized
//! set it computes a defining set of the key, pads it so that every member
//! receives at least one cell, and splits the cells round-robin among the
//! members. Pooling a whole authorized set's pieces recovers a defining
//! set, and the greedy completion then reproduces the key. Recovery is a
//! plain deterministic fill; no search is involved on the receiving side.
//!
//! No information-theoretic security is claimed: partial pools may leak or
//! even reconstruct (an order-2 key, say, is recoverable from nothing).
//! [`audit`] reports such leaks instead of hiding them.

use std::collections::{BTreeMap, BTreeSet};

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::exact::{min_hitting_set, SetFamily};
use crate::latin::{
    cell_vertex, greedy_complete, latin_descents, vertex_cell, Cell, Completion, LatinSquare,
    PartialLatinSquare, MAX_EXACT_GDS_ORDER,
};

/// Participants and the family of subsets entitled to recover the key.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AccessStructure {
    participants: BTreeSet<String>,
    sets: Vec<AuthorizedSet>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AuthorizedSet {
    pub id: String,
    pub members: BTreeSet<String>,
}

fn check_identifier(kind: &str, id: &str) -> Result<()> {
    if id.is_empty() {
        return Err(Error::invalid(format!("{kind} identifier is empty")));
    }
    if id.chars().any(char::is_whitespace) {
        return Err(Error::invalid(format!(
            "{kind} identifier {id:?} contains whitespace"
        )));
    }
    Ok(())
}

impl AccessStructure {
    pub fn new(
        participants: impl IntoIterator<Item = String>,
        sets: impl IntoIterator<Item = (String, Vec<String>)>,
    ) -> Result<Self> {
        let participants: BTreeSet<String> = participants.into_iter().collect();
        for p in &participants {
            check_identifier("participant", p)?;
        }
        let mut seen_ids = BTreeSet::new();
        let mut out = Vec::new();
        for (id, members) in sets {
            check_identifier("set", &id)?;
            if !seen_ids.insert(id.clone()) {
                return Err(Error::invalid(format!("duplicate set id {id}")));
            }
            if members.is_empty() {
                return Err(Error::invalid(format!("authorized set {id} is empty")));
            }
            let members: BTreeSet<String> = members.into_iter().collect();
            for m in &members {
                if !participants.contains(m) {
                    return Err(Error::invalid(format!(
                        "set {id} lists unknown participant {m}"
                    )));
                }
            }
            out.push(AuthorizedSet { id, members });
        }
        Ok(AccessStructure { participants, sets: out })
    }

    pub fn participants(&self) -> impl Iterator<Item = &str> {
        self.participants.iter().map(String::as_str)
    }

    pub fn sets(&self) -> &[AuthorizedSet] {
        &self.sets
    }
}

/// Per-participant, per-authorized-set fragments of the key's defining
/// sets. Within one set the pieces are pairwise disjoint and their union is
/// a defining set of the key.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ShareBundle {
    n: usize,
    pieces: BTreeMap<(String, String), Vec<Cell>>,
}

impl ShareBundle {
    pub fn n(&self) -> usize {
        self.n
    }

    /// Piece for `(participant, set_id)`; missing keys read as empty.
    pub fn piece(&self, participant: &str, set_id: &str) -> &[Cell] {
        self.pieces
            .get(&(participant.to_string(), set_id.to_string()))
            .map(Vec::as_slice)
            .unwrap_or(&[])
    }

    /// All pieces, keyed by `(participant, set_id)`, in key order.
    pub fn pieces(&self) -> impl Iterator<Item = (&str, &str, &[Cell])> {
        self.pieces
            .iter()
            .map(|((p, s), cells)| (p.as_str(), s.as_str(), cells.as_slice()))
    }

    pub fn from_records(n: usize, records: impl IntoIterator<Item = ShareRecord>) -> Result<Self> {
        let mut pieces = BTreeMap::new();
        for r in records {
            if r.n != n {
                return Err(Error::invalid(format!(
                    "share for ({}, {}) has order {}, expected {n}",
                    r.participant, r.set_id, r.n
                )));
            }
            if pieces.insert((r.participant.clone(), r.set_id.clone()), r.cells).is_some() {
                return Err(Error::invalid(format!(
                    "duplicate share for ({}, {})",
                    r.participant, r.set_id
                )));
            }
        }
        Ok(ShareBundle { n, pieces })
    }
}

/// Splits the key `l` into per-participant pieces, one defining set per
/// authorized set. Deterministic for a given `(l, a, seed)`; the seed only
/// steers tie-breaking so that distinct sets typically receive distinct
/// defining sets.
pub fn deal(l: &LatinSquare, a: &AccessStructure, seed: u64) -> Result<ShareBundle> {
    let n = l.n();
    let mut master = ChaCha8Rng::seed_from_u64(seed);
    let mut pieces: BTreeMap<(String, String), Vec<Cell>> = BTreeMap::new();
    for set in a.sets() {
        let mut rng = ChaCha8Rng::seed_from_u64(master.random());
        let mut cells = if n <= MAX_EXACT_GDS_ORDER {
            exact_gds_positions(l, &mut rng)?
        } else {
            greedy_gds_positions(l, &mut rng)
        };

        // Pad with the smallest unused cells so every member gets a piece;
        // supersets of a defining set consistent with the key stay defining.
        let members: Vec<&String> = set.members.iter().collect();
        let have: BTreeSet<(usize, usize)> = cells.iter().copied().collect();
        'pad: for r in 1..=n {
            for c in 1..=n {
                if cells.len() >= members.len() {
                    break 'pad;
                }
                if !have.contains(&(r, c)) {
                    cells.push((r, c));
                }
            }
        }
        cells.sort_unstable();

        let union = PartialLatinSquare::from_cells(n, cells.iter().map(|&(r, c)| l.cell(r, c)))?;
        if !crate::latin::verify_latin_gds(l, &union)? {
            return Err(Error::internal(format!(
                "dealt pool for set {} is not a defining set",
                set.id
            )));
        }

        for member in &members {
            pieces.insert(((*member).clone(), set.id.clone()), Vec::new());
        }
        for (i, &(r, c)) in cells.iter().enumerate() {
            let member = members[i % members.len()];
            pieces
                .get_mut(&(member.clone(), set.id.clone()))
                .expect("inserted above")
                .push(l.cell(r, c));
        }
    }
    Ok(ShareBundle { n, pieces })
}

/// Exact minimum transversal of the descents with seeded tie-breaking: the
/// cells are relabeled by a random permutation, the lexicographic solver
/// runs in that space, and the witness is mapped back.
fn exact_gds_positions(l: &LatinSquare, rng: &mut ChaCha8Rng) -> Result<Vec<(usize, usize)>> {
    let n = l.n();
    let sets: Vec<Vec<usize>> = latin_descents(l)
        .iter()
        .map(|d| d.positions().iter().map(|&(r, c)| cell_vertex(n, r, c)).collect())
        .collect();
    let mut universe: Vec<usize> = sets.iter().flatten().copied().collect();
    universe.sort_unstable();
    universe.dedup();

    let mut rank: Vec<usize> = (0..universe.len()).collect();
    for k in (1..rank.len()).rev() {
        let r = rng.random_range(0..=k);
        rank.swap(k, r);
    }
    let relabel = |e: usize| rank[universe.binary_search(&e).expect("member of universe")] + 1;
    let relabeled: Vec<Vec<usize>> = sets
        .iter()
        .map(|s| s.iter().map(|&e| relabel(e)).collect())
        .collect();
    let witness = min_hitting_set(&SetFamily::from_sets(relabeled))?;

    let mut unrank = vec![0usize; universe.len()];
    for (i, &r) in rank.iter().enumerate() {
        unrank[r] = universe[i];
    }
    Ok(witness.into_iter().map(|id| vertex_cell(n, unrank[id - 1])).collect())
}

/// Greedy max-coverage transversal with seeded tie-breaking among the
/// best cells.
fn greedy_gds_positions(l: &LatinSquare, rng: &mut ChaCha8Rng) -> Vec<(usize, usize)> {
    let descents = latin_descents(l);
    let mut covered = vec![false; descents.len()];
    let mut remaining = descents.len();
    let mut chosen = Vec::new();
    while remaining > 0 {
        let mut gain: BTreeMap<(usize, usize), usize> = BTreeMap::new();
        for (i, d) in descents.iter().enumerate() {
            if !covered[i] {
                for p in d.positions() {
                    *gain.entry(p).or_default() += 1;
                }
            }
        }
        let best = *gain.values().max().expect("uncovered descents have cells");
        let candidates: Vec<(usize, usize)> =
            gain.iter().filter(|&(_, &g)| g == best).map(|(&p, _)| p).collect();
        let pos = candidates[rng.random_range(0..candidates.len())];
        chosen.push(pos);
        for (i, d) in descents.iter().enumerate() {
            if !covered[i] && d.positions().contains(&pos) {
                covered[i] = true;
                remaining -= 1;
            }
        }
    }
    chosen
}

/// Outcome of pooling pieces: the recovered key, or the cell at which the
/// greedy completion got stuck (an under-informed pool).
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ReconstructOutcome {
    Key(LatinSquare),
    Failed { row: usize, col: usize },
}

/// Pools any number of pieces and runs the greedy completion. Conflicting
/// cells are an input error; an incomplete pool is a normal failure
/// outcome.
pub fn reconstruct(pieces: &[Vec<Cell>], n: usize) -> Result<ReconstructOutcome> {
    let mut pool = PartialLatinSquare::new(n)?;
    for piece in pieces {
        for cell in piece {
            pool.insert(cell.row, cell.col, cell.entry)?;
        }
    }
    Ok(match greedy_complete(&pool) {
        Completion::Complete(sq) => ReconstructOutcome::Key(sq),
        Completion::Stuck { row, col } => ReconstructOutcome::Failed { row, col },
    })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SetAudit {
    pub set_id: String,
    /// Number of distinct cells in the set's pooled pieces.
    pub pool_size: usize,
    /// Members whose piece is redundant: dropping it still recovers the
    /// key. Reported, not asserted.
    pub leaked_without: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AuditReport {
    pub sets: Vec<SetAudit>,
    /// True when the empty pool already recovers the key, i.e. anyone can.
    pub trivially_recoverable: bool,
}

/// Replays every authorized set against the bundle: each must reconstruct
/// the key exactly (anything else is an [`Error::AuditFailed`]), and for
/// sets of two or more members each single-member omission is probed for
/// leakage.
pub fn audit(l: &LatinSquare, a: &AccessStructure, b: &ShareBundle) -> Result<AuditReport> {
    if b.n() != l.n() {
        return Err(Error::invalid(format!(
            "bundle has order {}, key has order {}",
            b.n(),
            l.n()
        )));
    }
    let mut sets = Vec::new();
    for set in a.sets() {
        let pieces: Vec<Vec<Cell>> = set
            .members
            .iter()
            .map(|m| b.piece(m, &set.id).to_vec())
            .collect();
        let pool_size = pieces
            .iter()
            .flatten()
            .map(|c| (c.row, c.col))
            .collect::<BTreeSet<_>>()
            .len();
        match reconstruct(&pieces, l.n())? {
            ReconstructOutcome::Key(sq) if sq == *l => {}
            _ => return Err(Error::AuditFailed { set_id: set.id.clone() }),
        }
        let mut leaked_without = Vec::new();
        if set.members.len() >= 2 {
            for (i, member) in set.members.iter().enumerate() {
                let partial: Vec<Vec<Cell>> = pieces
                    .iter()
                    .enumerate()
                    .filter(|&(j, _)| j != i)
                    .map(|(_, p)| p.clone())
                    .collect();
                if let ReconstructOutcome::Key(sq) = reconstruct(&partial, l.n())? {
                    if sq == *l {
                        leaked_without.push(member.clone());
                    }
                }
            }
        }
        sets.push(SetAudit { set_id: set.id.clone(), pool_size, leaked_without });
    }
    let trivially_recoverable = match reconstruct(&[], l.n())? {
        ReconstructOutcome::Key(sq) => sq == *l,
        ReconstructOutcome::Failed { .. } => false,
    };
    Ok(AuditReport { sets, trivially_recoverable })
}

/// One share file: the piece of a single participant for a single set.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ShareRecord {
    pub n: usize,
    pub set_id: String,
    pub participant: String,
    pub cells: Vec<Cell>,
}

pub const SHARE_MAGIC: &str = "GDS-SHARE v1";

/// Serializes a piece in the share wire format.
pub fn write_share(record: &ShareRecord) -> String {
    let mut out = String::new();
    out.push_str(SHARE_MAGIC);
    out.push('\n');
    out.push_str(&format!("n={}\n", record.n));
    out.push_str(&format!("set={}\n", record.set_id));
    out.push_str(&format!("participant={}\n", record.participant));
    out.push_str(&format!("cells={}\n", record.cells.len()));
    for c in &record.cells {
        out.push_str(&format!("{} {} {}\n", c.row, c.col, c.entry));
    }
    out
}

/// Parses the share wire format.
pub fn parse_share(text: &str) -> Result<ShareRecord> {
    let mut lines = text.lines();
    let magic = lines.next().ok_or_else(|| Error::parse("empty share file"))?;
    if magic.trim() != SHARE_MAGIC {
        return Err(Error::parse(format!("expected header {SHARE_MAGIC:?}, found {magic:?}")));
    }
    let mut field = |name: &str| -> Result<String> {
        let line = lines
            .next()
            .ok_or_else(|| Error::parse(format!("missing {name}= line")))?;
        line.strip_prefix(&format!("{name}="))
            .map(str::to_string)
            .ok_or_else(|| Error::parse(format!("expected {name}= line, found {line:?}")))
    };
    let n: usize = field("n")?
        .parse()
        .map_err(|_| Error::parse("n= value is not a number"))?;
    let set_id = field("set")?;
    let participant = field("participant")?;
    let count: usize = field("cells")?
        .parse()
        .map_err(|_| Error::parse("cells= value is not a number"))?;
    check_identifier("set", &set_id)?;
    check_identifier("participant", &participant)?;
    let mut cells = Vec::with_capacity(count);
    for i in 0..count {
        let line = lines
            .next()
            .ok_or_else(|| Error::parse(format!("expected {count} cell lines, found {i}")))?;
        let nums: Vec<usize> = line
            .split_whitespace()
            .map(|t| t.parse().map_err(|_| Error::parse(format!("bad cell line {line:?}"))))
            .collect::<Result<_>>()?;
        if nums.len() != 3 {
            return Err(Error::parse(format!("cell line {line:?} needs three numbers")));
        }
        cells.push(Cell::new(nums[0], nums[1], nums[2]));
    }
    Ok(ShareRecord { n, set_id, participant, cells })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cyclic3() -> LatinSquare {
        LatinSquare::new(vec![vec![1, 2, 3], vec![2, 3, 1], vec![3, 1, 2]]).unwrap()
    }

    fn l2() -> LatinSquare {
        LatinSquare::new(vec![vec![1, 2], vec![2, 1]]).unwrap()
    }

    fn access(sets: &[(&str, &[&str])]) -> AccessStructure {
        let participants: BTreeSet<String> = sets
            .iter()
            .flat_map(|(_, ms)| ms.iter().map(|m| m.to_string()))
            .collect();
        AccessStructure::new(
            participants,
            sets.iter()
                .map(|(id, ms)| (id.to_string(), ms.iter().map(|m| m.to_string()).collect())),
        )
        .unwrap()
    }

    #[test]
    fn single_participant_gets_a_defining_set() {
        let l = cyclic3();
        let a = access(&[("s1", &["p1"])]);
        let b = deal(&l, &a, 0).unwrap();
        let piece = b.piece("p1", "s1").to_vec();
        assert!(!piece.is_empty());
        match reconstruct(&[piece], 3).unwrap() {
            ReconstructOutcome::Key(sq) => assert_eq!(sq, l),
            other => panic!("expected the key, got {other:?}"),
        }
    }

    #[test]
    fn two_participants_split_padded_cells() {
        let l = cyclic3();
        let a = access(&[("s1", &["p1", "p2"])]);
        let b = deal(&l, &a, 0).unwrap();
        let p1 = b.piece("p1", "s1").to_vec();
        let p2 = b.piece("p2", "s1").to_vec();
        assert_eq!(p1.len(), 1);
        assert_eq!(p2.len(), 1);
        assert_ne!(p1, p2);
        match reconstruct(&[p1, p2], 3).unwrap() {
            ReconstructOutcome::Key(sq) => assert_eq!(sq, l),
            other => panic!("expected the key, got {other:?}"),
        }
    }

    #[test]
    fn order_two_key_is_recoverable_by_anyone() {
        let l = l2();
        let a = access(&[("s1", &["p1", "p2"])]);
        let b = deal(&l, &a, 5).unwrap();
        assert_eq!(b.piece("p1", "s1").len() + b.piece("p2", "s1").len(), 2);
        let report = audit(&l, &a, &b).unwrap();
        assert!(report.trivially_recoverable);
    }

    #[test]
    fn reconstruct_outcomes() {
        match reconstruct(&[vec![Cell::new(2, 2, 3)]], 3).unwrap() {
            ReconstructOutcome::Key(sq) => assert_eq!(sq, cyclic3()),
            other => panic!("unexpected {other:?}"),
        }
        assert_eq!(
            reconstruct(&[vec![Cell::new(1, 1, 1)]], 3).unwrap(),
            ReconstructOutcome::Failed { row: 2, col: 3 }
        );
        match reconstruct(&[], 2).unwrap() {
            ReconstructOutcome::Key(sq) => assert_eq!(sq, l2()),
            other => panic!("unexpected {other:?}"),
        }
        // Conflicting pools are input errors, not failures.
        let bad = vec![vec![Cell::new(1, 1, 1)], vec![Cell::new(1, 1, 2)]];
        assert!(matches!(reconstruct(&bad, 3), Err(Error::InvalidInput(_))));
    }

    #[test]
    fn audit_detects_missing_pieces() {
        let l = cyclic3();
        let a = access(&[("s1", &["p1", "p2"])]);
        let b = deal(&l, &a, 0).unwrap();
        let report = audit(&l, &a, &b).unwrap();
        assert_eq!(report.sets.len(), 1);
        assert_eq!(report.sets[0].pool_size, 2);

        // Drop one participant's piece.
        let records: Vec<ShareRecord> = b
            .pieces()
            .filter(|(p, _, _)| *p != "p1")
            .map(|(p, s, cells)| ShareRecord {
                n: 3,
                set_id: s.to_string(),
                participant: p.to_string(),
                cells: cells.to_vec(),
            })
            .collect();
        let depleted = ShareBundle::from_records(3, records).unwrap();
        match audit(&l, &a, &depleted) {
            Err(Error::AuditFailed { set_id }) => assert_eq!(set_id, "s1"),
            Ok(report) => assert!(report.sets[0].leaked_without.contains(&"p1".to_string())),
            Err(e) => panic!("unexpected error {e}"),
        }
    }

    #[test]
    fn deal_is_deterministic_and_validates() {
        let l = cyclic3();
        let a = access(&[("s1", &["p1", "p2"]), ("s2", &["p2", "p3"])]);
        assert_eq!(deal(&l, &a, 42).unwrap(), deal(&l, &a, 42).unwrap());

        let empty_set = AccessStructure::new(
            ["p1".to_string()],
            [("s1".to_string(), Vec::<String>::new())],
        );
        assert!(empty_set.is_err());
    }

    #[test]
    fn share_round_trip() {
        let record = ShareRecord {
            n: 3,
            set_id: "s1".to_string(),
            participant: "p1".to_string(),
            cells: vec![Cell::new(2, 2, 3), Cell::new(1, 1, 1)],
        };
        let text = write_share(&record);
        assert_eq!(parse_share(&text).unwrap(), record);
        assert!(parse_share("nonsense").is_err());
    }
}
