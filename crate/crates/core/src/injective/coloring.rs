use super::cycles::simple_cycles;
use super::dual::Orientation;
use crate::error::{Error, Result};

/// A total orientation with a color in {0, 1, 2} on each arc.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ColoredOrientation {
    pub orientation: Orientation,
    /// Color per arc index.
    pub colors: Vec<u8>,
}

impl ColoredOrientation {
    /// Independent check: distinct colors into every vertex, and no simple
    /// directed cycle of non-loop arcs in one color.
    pub fn audit(&self) -> bool {
        let o = &self.orientation;
        for v in 0..o.vertices {
            let mut seen = [false; 3];
            for (i, a) in o.arcs.iter().enumerate() {
                if a.to == v {
                    let c = self.colors[i] as usize;
                    if c > 2 || seen[c] {
                        return false;
                    }
                    seen[c] = true;
                }
            }
        }
        simple_cycles(o).iter().all(|cycle| {
            let c = self.colors[cycle[0]];
            cycle.iter().any(|&i| self.colors[i] != c)
        })
    }
}

const PERMUTATIONS: [[u8; 3]; 6] = [[0, 1, 2], [0, 2, 1], [1, 0, 2], [1, 2, 0], [2, 0, 1], [2, 1, 0]];

/// Backtracking search for an admissible coloring: each vertex gives its
/// three incoming arcs a permutation of the colors, rejecting any partial
/// coloring with a monochromatic directed cycle.
///
/// `NotFound` means no such coloring exists, which the hypotheses (two faces
/// share at most one edge) rule out.
pub fn find_coloring(o: &Orientation) -> Result<ColoredOrientation> {
    o.ensure_total()?;
    let incoming: Vec<Vec<usize>> = (0..o.vertices)
        .map(|v| (0..o.arcs.len()).filter(|&i| o.arcs[i].to == v).collect())
        .collect();
    let mut colors: Vec<Option<u8>> = vec![None; o.arcs.len()];
    if assign(o, &incoming, 0, &mut colors) {
        let colored = ColoredOrientation {
            orientation: o.clone(),
            colors: colors.into_iter().map(|c| c.expect("every arc colored")).collect(),
        };
        debug_assert!(colored.audit());
        Ok(colored)
    } else {
        Err(Error::NotFound)
    }
}

fn assign(o: &Orientation, incoming: &[Vec<usize>], v: usize, colors: &mut [Option<u8>]) -> bool {
    if v == o.vertices {
        return true;
    }
    for perm in PERMUTATIONS {
        for (k, &i) in incoming[v].iter().enumerate() {
            colors[i] = Some(perm[k]);
        }
        if (0..3).all(|c| !has_cycle_in_color(o, colors, c)) && assign(o, incoming, v + 1, colors) {
            return true;
        }
    }
    for &i in &incoming[v] {
        colors[i] = None;
    }
    false
}

/// Depth-first cycle detection on the non-loop arcs of color `c`.
fn has_cycle_in_color(o: &Orientation, colors: &[Option<u8>], c: u8) -> bool {
    let mut out: Vec<Vec<usize>> = vec![Vec::new(); o.vertices];
    for (i, a) in o.arcs.iter().enumerate() {
        if !a.is_loop() && colors[i] == Some(c) {
            out[a.from].push(a.to);
        }
    }
    // 0 unvisited, 1 on stack, 2 done
    let mut state = vec![0u8; o.vertices];
    fn visit(v: usize, out: &[Vec<usize>], state: &mut [u8]) -> bool {
        state[v] = 1;
        for &w in &out[v] {
            if state[w] == 1 || (state[w] == 0 && visit(w, out, state)) {
                return true;
            }
        }
        state[v] = 2;
        false
    }
    (0..o.vertices).any(|v| state[v] == 0 && visit(v, &out, &mut state))
}
