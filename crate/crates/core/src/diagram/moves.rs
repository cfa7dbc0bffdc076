//! Reidemeister I and II rewrites.
//!
//! Both moves subdivide existing edges and splice in new crossings. The new
//! tuples use temporary labels; `rebuild` renumbers them so that each
//! component stays consecutively labelled along its orientation.

use alloc::vec;
use alloc::vec::Vec;

use super::{Diagram, Side, Sign};
use crate::{Error, Result};

/// Which strand of a kink crossing is met first when walking along the edge.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Pass {
    Under,
    Over,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Kink {
    pub sign: Sign,
    pub first: Pass,
}

impl Diagram {
    /// Adds a kink of the given sign on `edge`, first passing under.
    pub fn r1_move(&self, edge: usize, sign: Sign) -> Result<Diagram> {
        self.r1_kink(edge, Kink { sign, first: Pass::Under })
    }

    pub fn r1_kink(&self, edge: usize, kink: Kink) -> Result<Diagram> {
        if edge >= self.edge_count() {
            return Err(Error::InvalidEdge(edge));
        }
        let n_edges = self.edge_count();
        let mut tuples: Vec<[usize; 4]> = self.crossings.iter().map(|c| c.edges).collect();
        let (a, l) = (edge, n_edges);
        let b = if self.crossings.is_empty() {
            a
        } else {
            let head = self.ends[edge][1];
            tuples[head.crossing][head.slot] = n_edges + 1;
            n_edges + 1
        };
        tuples.push(match (kink.sign, kink.first) {
            (Sign::Positive, Pass::Under) => [a, b, l, l],
            (Sign::Negative, Pass::Under) => [a, l, l, b],
            (Sign::Positive, Pass::Over) => [l, l, b, a],
            (Sign::Negative, Pass::Over) => [l, a, b, l],
        });
        let mut subdiv: Vec<Vec<usize>> = (0..n_edges).map(|e| vec![e]).collect();
        subdiv[edge].push(l);
        if b != a {
            subdiv[edge].push(b);
        }
        self.rebuild(&tuples, &subdiv)
    }

    /// Pushes a finger of `over` across `under` through their lowest-numbered
    /// common region.
    pub fn r2_move(&self, over: usize, under: usize) -> Result<Diagram> {
        let region = self
            .common_regions(over, under)?
            .into_iter()
            .min()
            .ok_or(Error::NoCommonRegion(over, under))?;
        self.r2_move_in(over, under, region)
    }

    /// Regions bounded by both edges.
    pub fn common_regions(&self, a: usize, b: usize) -> Result<Vec<usize>> {
        let (al, ar) = self.edge_sides(a)?;
        let (bl, br) = self.edge_sides(b)?;
        let mut out: Vec<usize> = [al, ar].into_iter().filter(|r| *r == bl || *r == br).collect();
        out.dedup();
        Ok(out)
    }

    /// Pushes a finger of edge `over` through `region` and across edge
    /// `under`, creating a positive and a negative crossing.
    pub fn r2_move_in(&self, over: usize, under: usize, region: usize) -> Result<Diagram> {
        let (al, ar) = self.edge_sides(over)?;
        let (bl, br) = self.edge_sides(under)?;
        if region >= self.region_count() {
            return Err(Error::InvalidRegion(region));
        }
        if over == under || !(region == al || region == ar) || !(region == bl || region == br) {
            return Err(Error::NoCommonRegion(over, under));
        }
        if self.crossings.is_empty() {
            // Only one edge exists, so `over == under` was already rejected.
            return Err(Error::NoCommonRegion(over, under));
        }
        // In a local frame where the finger of `over` points from +y to -y,
        // each strand runs either along +x or along -x.
        let a_pos = region == ar;
        let b_pos = region == bl;
        let n_edges = self.edge_count();
        let (a1, a2, a3) = (over, n_edges, n_edges + 1);
        let (b1, b2, b3) = (under, n_edges + 2, n_edges + 3);
        let mut tuples: Vec<[usize; 4]> = self.crossings.iter().map(|c| c.edges).collect();
        let ha = self.ends[over][1];
        let hb = self.ends[under][1];
        tuples[ha.crossing][ha.slot] = a3;
        tuples[hb.crossing][hb.slot] = b3;
        let new = match (a_pos, b_pos) {
            (true, true) => [[b1, a2, b2, a1], [b2, a2, b3, a3]],
            (true, false) => [[b1, a3, b2, a2], [b2, a1, b3, a2]],
            (false, true) => [[b1, a2, b2, a3], [b2, a2, b3, a1]],
            (false, false) => [[b1, a1, b2, a2], [b2, a3, b3, a2]],
        };
        tuples.extend(new);
        let mut subdiv: Vec<Vec<usize>> = (0..n_edges).map(|e| vec![e]).collect();
        subdiv[over].extend([a2, a3]);
        subdiv[under].extend([b2, b3]);
        self.rebuild(&tuples, &subdiv)
    }

    fn rebuild(&self, tuples: &[[usize; 4]], subdiv: &[Vec<usize>]) -> Result<Diagram> {
        let total: usize = subdiv.iter().map(Vec::len).sum();
        let temp_max = subdiv.iter().flatten().copied().max().unwrap_or(0);
        let mut relabel = vec![usize::MAX; temp_max + 1];
        let mut k = 0;
        for parts in subdiv {
            for &p in parts {
                relabel[p] = k;
                k += 1;
            }
        }
        debug_assert_eq!(k, total);
        let tuples: Vec<[usize; 4]> = tuples.iter().map(|t| t.map(|e| relabel[e])).collect();
        let (e, side): (usize, Side) = self.outer_ref();
        let d = Diagram::from_tuples(&tuples, Some((relabel[e], side)))?;
        Ok(match &self.name {
            Some(n) => d.with_name(n.clone()),
            None => d,
        })
    }
}
