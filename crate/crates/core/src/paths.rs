//! Brute-force counts of Motzkin paths and domino tilings.
//!
//! These never touch the series code. Paths use steps `U = (1,1)`,
//! `D = (1,-1)` and `H = (1,0)` from height 0 back to height 0; Motzkin
//! paths stay at height >= 0, grand Motzkin paths may go below.

use std::collections::HashMap;

use thiserror::Error;

/// Largest path length accepted by [`count_paths`].
pub const MAX_PATH_LENGTH: usize = 16;
/// Largest board accepted by [`count_tilings`].
pub const MAX_BOARD_LENGTH: usize = 20;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PathError {
    #[error("length {n} is above the enumeration bound {max}")]
    TooLong { n: usize, max: usize },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Step {
    Up,
    Down,
    Level,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum PathVariant {
    Motzkin,
    GrandMotzkin,
}

/// What a path is counted by.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum PathStatistic {
    LevelSteps,
    UpSteps,
    /// `#U + #H`, i.e. `n - #D`.
    UpPlusLevelSteps,
}

impl PathStatistic {
    fn weight(self, step: Step) -> usize {
        match (self, step) {
            (PathStatistic::LevelSteps, Step::Level) => 1,
            (PathStatistic::UpSteps, Step::Up) => 1,
            (PathStatistic::UpPlusLevelSteps, Step::Up | Step::Level) => 1,
            _ => 0,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct PathClass {
    pub variant: PathVariant,
    pub statistic: PathStatistic,
}

impl PathClass {
    pub fn new(variant: PathVariant, statistic: PathStatistic) -> Self {
        PathClass { variant, statistic }
    }
}

const STEPS: [(Step, i64); 3] = [(Step::Up, 1), (Step::Down, -1), (Step::Level, 0)];

struct Counter {
    class: PathClass,
    memo: HashMap<(usize, i64), Vec<u64>>,
}

impl Counter {
    /// Counts by statistic value of all completions of length `remaining`
    /// starting at `height`.
    fn completions(&mut self, remaining: usize, height: i64) -> Vec<u64> {
        if height.unsigned_abs() as usize > remaining {
            return Vec::new();
        }
        if remaining == 0 {
            return vec![1];
        }
        if let Some(v) = self.memo.get(&(remaining, height)) {
            return v.clone();
        }
        let mut out: Vec<u64> = Vec::new();
        for (step, dy) in STEPS {
            let next = height + dy;
            if next < 0 && self.class.variant == PathVariant::Motzkin {
                continue;
            }
            let w = self.class.statistic.weight(step);
            for (k, c) in self.completions(remaining - 1, next).into_iter().enumerate() {
                if out.len() <= k + w {
                    out.resize(k + w + 1, 0);
                }
                out[k + w] += c;
            }
        }
        self.memo.insert((remaining, height), out.clone());
        out
    }
}

/// Number of paths of length `n` for each statistic value `k = 0..=n`.
pub fn count_table(class: PathClass, n: usize) -> Result<Vec<u64>, PathError> {
    if n > MAX_PATH_LENGTH {
        return Err(PathError::TooLong { n, max: MAX_PATH_LENGTH });
    }
    let mut counter = Counter { class, memo: HashMap::new() };
    let mut table = counter.completions(n, 0);
    table.resize(n + 1, 0);
    Ok(table)
}

/// Number of paths of length `n` in `class` whose statistic equals `k`.
pub fn count_paths(class: PathClass, n: usize, k: usize) -> Result<u64, PathError> {
    Ok(count_table(class, n)?.get(k).copied().unwrap_or(0))
}

/// Every path of length `n`, generated depth-first without memoization.
pub fn enumerate_paths(variant: PathVariant, n: usize) -> Result<Vec<Vec<Step>>, PathError> {
    if n > MAX_PATH_LENGTH {
        return Err(PathError::TooLong { n, max: MAX_PATH_LENGTH });
    }
    fn go(variant: PathVariant, left: usize, h: i64, cur: &mut Vec<Step>, out: &mut Vec<Vec<Step>>) {
        if h.unsigned_abs() as usize > left {
            return;
        }
        if left == 0 {
            out.push(cur.clone());
            return;
        }
        for (step, dy) in STEPS {
            if variant == PathVariant::Motzkin && h + dy < 0 {
                continue;
            }
            cur.push(step);
            go(variant, left - 1, h + dy, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(variant, n, 0, &mut Vec::with_capacity(n), &mut out);
    Ok(out)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Tile {
    Square,
    Domino,
}

/// Every tiling of an `n x 1` board by unit squares and dominoes.
pub fn enumerate_tilings(n: usize) -> Result<Vec<Vec<Tile>>, PathError> {
    if n > MAX_BOARD_LENGTH {
        return Err(PathError::TooLong { n, max: MAX_BOARD_LENGTH });
    }
    fn go(left: usize, cur: &mut Vec<Tile>, out: &mut Vec<Vec<Tile>>) {
        if left == 0 {
            out.push(cur.clone());
            return;
        }
        cur.push(Tile::Square);
        go(left - 1, cur, out);
        cur.pop();
        if left >= 2 {
            cur.push(Tile::Domino);
            go(left - 2, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(n, &mut Vec::new(), &mut out);
    Ok(out)
}

/// Tilings of an `n`-board using exactly `k` unit squares.
pub fn count_tilings(n: usize, k: usize) -> Result<u64, PathError> {
    Ok(enumerate_tilings(n)?
        .iter()
        .filter(|t| t.iter().filter(|&&x| x == Tile::Square).count() == k)
        .count() as u64)
}
