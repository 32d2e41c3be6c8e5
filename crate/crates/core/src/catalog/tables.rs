//! Embedded arithmetic tables for the built-in fields of order 9 and 27
//! and the order-9 Dickson near-field, each pinned by an FNV-1a checksum.
//!
//! Encodings: order 9 uses index a + 3b for a + b i with i^2 = -1;
//! order 27 uses index c0 + 3 c1 + 9 c2 for c0 + c1 x + c2 x^2 with
//! x^3 = x + 1. The near-field product twists multiplication by the
//! Frobenius cube on non-square right factors.


pub(crate) const F9_ADD: [[u8; 9]; 9] = [
    [0,1,2,3,4,5,6,7,8],
    [1,2,0,4,5,3,7,8,6],
    [2,0,1,5,3,4,8,6,7],
    [3,4,5,6,7,8,0,1,2],
    [4,5,3,7,8,6,1,2,0],
    [5,3,4,8,6,7,2,0,1],
    [6,7,8,0,1,2,3,4,5],
    [7,8,6,1,2,0,4,5,3],
    [8,6,7,2,0,1,5,3,4],
];
pub(crate) const F9_MUL: [[u8; 9]; 9] = [
    [0,0,0,0,0,0,0,0,0],
    [0,1,2,3,4,5,6,7,8],
    [0,2,1,6,8,7,3,5,4],
    [0,3,6,2,5,8,1,4,7],
    [0,4,8,5,6,1,7,2,3],
    [0,5,7,8,1,3,4,6,2],
    [0,6,3,1,7,4,2,8,5],
    [0,7,5,4,2,6,8,3,1],
    [0,8,4,7,3,2,5,1,6],
];
pub(crate) const J9_MUL: [[u8; 9]; 9] = [
    [0,0,0,0,0,0,0,0,0],
    [0,1,2,3,4,5,6,7,8],
    [0,2,1,6,8,7,3,5,4],
    [0,3,6,2,7,4,1,8,5],
    [0,4,8,5,2,6,7,3,1],
    [0,5,7,8,3,2,4,1,6],
    [0,6,3,1,5,8,2,4,7],
    [0,7,5,4,6,1,8,2,3],
    [0,8,4,7,1,3,5,6,2],
];
pub(crate) const F27_ADD: [[u8; 27]; 27] = [
    [0,1,2,3,4,5,6,7,8,9,10,11,12,13,14,15,16,17,18,19,20,21,22,23,24,25,26],
    [1,2,0,4,5,3,7,8,6,10,11,9,13,14,12,16,17,15,19,20,18,22,23,21,25,26,24],
    [2,0,1,5,3,4,8,6,7,11,9,10,14,12,13,17,15,16,20,18,19,23,21,22,26,24,25],
    [3,4,5,6,7,8,0,1,2,12,13,14,15,16,17,9,10,11,21,22,23,24,25,26,18,19,20],
    [4,5,3,7,8,6,1,2,0,13,14,12,16,17,15,10,11,9,22,23,21,25,26,24,19,20,18],
    [5,3,4,8,6,7,2,0,1,14,12,13,17,15,16,11,9,10,23,21,22,26,24,25,20,18,19],
    [6,7,8,0,1,2,3,4,5,15,16,17,9,10,11,12,13,14,24,25,26,18,19,20,21,22,23],
    [7,8,6,1,2,0,4,5,3,16,17,15,10,11,9,13,14,12,25,26,24,19,20,18,22,23,21],
    [8,6,7,2,0,1,5,3,4,17,15,16,11,9,10,14,12,13,26,24,25,20,18,19,23,21,22],
    [9,10,11,12,13,14,15,16,17,18,19,20,21,22,23,24,25,26,0,1,2,3,4,5,6,7,8],
    [10,11,9,13,14,12,16,17,15,19,20,18,22,23,21,25,26,24,1,2,0,4,5,3,7,8,6],
    [11,9,10,14,12,13,17,15,16,20,18,19,23,21,22,26,24,25,2,0,1,5,3,4,8,6,7],
    [12,13,14,15,16,17,9,10,11,21,22,23,24,25,26,18,19,20,3,4,5,6,7,8,0,1,2],
    [13,14,12,16,17,15,10,11,9,22,23,21,25,26,24,19,20,18,4,5,3,7,8,6,1,2,0],
    [14,12,13,17,15,16,11,9,10,23,21,22,26,24,25,20,18,19,5,3,4,8,6,7,2,0,1],
    [15,16,17,9,10,11,12,13,14,24,25,26,18,19,20,21,22,23,6,7,8,0,1,2,3,4,5],
    [16,17,15,10,11,9,13,14,12,25,26,24,19,20,18,22,23,21,7,8,6,1,2,0,4,5,3],
    [17,15,16,11,9,10,14,12,13,26,24,25,20,18,19,23,21,22,8,6,7,2,0,1,5,3,4],
    [18,19,20,21,22,23,24,25,26,0,1,2,3,4,5,6,7,8,9,10,11,12,13,14,15,16,17],
    [19,20,18,22,23,21,25,26,24,1,2,0,4,5,3,7,8,6,10,11,9,13,14,12,16,17,15],
    [20,18,19,23,21,22,26,24,25,2,0,1,5,3,4,8,6,7,11,9,10,14,12,13,17,15,16],
    [21,22,23,24,25,26,18,19,20,3,4,5,6,7,8,0,1,2,12,13,14,15,16,17,9,10,11],
    [22,23,21,25,26,24,19,20,18,4,5,3,7,8,6,1,2,0,13,14,12,16,17,15,10,11,9],
    [23,21,22,26,24,25,20,18,19,5,3,4,8,6,7,2,0,1,14,12,13,17,15,16,11,9,10],
    [24,25,26,18,19,20,21,22,23,6,7,8,0,1,2,3,4,5,15,16,17,9,10,11,12,13,14],
    [25,26,24,19,20,18,22,23,21,7,8,6,1,2,0,4,5,3,16,17,15,10,11,9,13,14,12],
    [26,24,25,20,18,19,23,21,22,8,6,7,2,0,1,5,3,4,17,15,16,11,9,10,14,12,13],
];
pub(crate) const F27_MUL: [[u8; 27]; 27] = [
    [0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0],
    [0,1,2,3,4,5,6,7,8,9,10,11,12,13,14,15,16,17,18,19,20,21,22,23,24,25,26],
    [0,2,1,6,8,7,3,5,4,18,20,19,24,26,25,21,23,22,9,11,10,15,17,16,12,14,13],
    [0,3,6,9,12,15,18,21,24,4,7,1,13,16,10,22,25,19,8,2,5,17,11,14,26,20,23],
    [0,4,8,12,16,11,24,19,23,13,17,9,25,20,21,1,5,6,26,18,22,2,3,7,14,15,10],
    [0,5,7,15,11,13,21,26,19,22,24,20,1,3,8,16,9,14,17,10,12,23,25,18,2,4,6],
    [0,6,3,18,24,21,9,15,12,8,5,2,26,23,20,17,14,11,4,1,7,22,19,25,13,10,16],
    [0,7,5,21,19,26,15,13,11,17,12,10,2,6,4,23,18,25,22,20,24,16,14,9,1,8,3],
    [0,8,4,24,23,19,12,11,16,26,22,18,14,10,15,2,7,3,13,9,17,1,6,5,25,21,20],
    [0,9,18,4,13,22,8,17,26,12,21,3,16,25,7,11,20,2,24,6,15,19,1,10,23,5,14],
    [0,10,20,7,17,24,5,12,22,21,4,14,19,2,9,26,6,16,15,25,8,13,23,3,11,18,1],
    [0,11,19,1,9,20,2,10,18,3,14,22,4,12,23,5,13,21,6,17,25,7,15,26,8,16,24],
    [0,12,24,13,25,1,26,2,14,16,19,4,20,5,17,3,15,18,23,8,11,6,9,21,10,22,7],
    [0,13,26,16,20,3,23,6,10,25,2,12,5,15,19,9,22,8,14,24,1,18,4,17,7,11,21],
    [0,14,25,10,21,8,20,4,15,7,9,23,17,19,3,24,2,13,5,16,18,12,26,1,22,6,11],
    [0,15,21,22,1,16,17,23,2,11,26,5,3,9,24,25,4,10,19,7,13,14,20,8,6,12,18],
    [0,16,23,25,5,9,14,18,7,20,6,13,15,22,2,4,11,24,10,26,3,8,12,19,21,1,17],
    [0,17,22,19,6,14,11,25,3,2,16,21,18,8,13,10,24,5,1,15,23,20,7,12,9,26,4],
    [0,18,9,8,26,17,4,22,13,24,15,6,23,14,5,19,10,1,12,3,21,11,2,20,16,7,25],
    [0,19,11,2,18,10,1,20,9,6,25,17,8,24,16,7,26,15,3,22,14,5,21,13,4,23,12],
    [0,20,10,5,22,12,7,24,17,15,8,25,11,1,18,13,3,23,21,14,4,26,16,6,19,9,2],
    [0,21,15,17,2,23,22,16,1,19,13,7,6,18,12,14,8,20,11,5,26,25,10,4,3,24,9],
    [0,22,17,11,3,25,19,14,6,1,23,15,9,4,26,20,12,7,2,21,16,10,5,24,18,13,8],
    [0,23,16,14,7,18,25,9,5,10,3,26,21,17,1,8,19,12,20,13,6,4,24,11,15,2,22],
    [0,24,12,26,14,2,13,1,25,23,11,8,10,7,22,6,21,9,16,4,19,3,18,15,20,17,5],
    [0,25,14,20,15,4,10,8,21,5,18,16,22,11,6,12,1,26,7,23,9,24,13,2,17,3,19],
    [0,26,13,23,10,6,16,3,20,14,1,24,7,21,11,18,17,4,25,12,2,9,8,22,5,19,15],
];

pub(crate) const F9_ADD_FNV: u64 = 0x6ff18da442acefbf;
pub(crate) const F9_MUL_FNV: u64 = 0x69c9fcc072e716f7;
pub(crate) const F27_ADD_FNV: u64 = 0xca8d0921a083628a;
pub(crate) const F27_MUL_FNV: u64 = 0x7d35842355157307;
pub(crate) const J9_MUL_FNV: u64 = 0x52f8c9163e8a7297;

pub(crate) fn fnv1a<const N: usize>(table: &[[u8; N]; N]) -> u64 {
    let mut h: u64 = 0xcbf2_9ce4_8422_2325;
    for row in table {
        for &v in row {
            h ^= v as u64;
            h = h.wrapping_mul(0x0000_0100_0000_01b3);
        }
    }
    h
}
