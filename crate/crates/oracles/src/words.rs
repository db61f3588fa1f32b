/// Word is strictly smaller than all its proper rotations (equivalent to
/// the suffix definition for primitive words).
pub fn is_lyndon(w: &[u8]) -> bool {
    if w.is_empty() {
        return false;
    }
    let n = w.len();
    (1..n).all(|k| {
        let rot: Vec<u8> = w[k..].iter().chain(w[..k].iter()).copied().collect();
        w < rot.as_slice()
    })
}

/// Every Lyndon word of length `n`, found by testing all `2^n` words.
pub fn lyndon_words(n: usize) -> Vec<Vec<u8>> {
    let mut out = Vec::new();
    for bits in 0u64..(1u64 << n) {
        let w: Vec<u8> = (0..n).rev().map(|k| ((bits >> k) & 1) as u8).collect();
        if is_lyndon(&w) {
            out.push(w);
        }
    }
    out.sort();
    out
}

/// `w = u v` with `v` the longest proper Lyndon suffix.
pub fn standard_factorization(w: &[u8]) -> Option<(Vec<u8>, Vec<u8>)> {
    if w.len() < 2 {
        return None;
    }
    let k = (1..w.len()).find(|&k| is_lyndon(&w[k..]))?;
    Some((w[..k].to_vec(), w[k..].to_vec()))
}

pub fn to_string(w: &[u8]) -> String {
    w.iter().map(|b| if *b == 0 { 'E' } else { 'F' }).collect()
}

pub fn from_str(s: &str) -> Vec<u8> {
    s.bytes()
        .map(|b| if b == b'E' || b == b'e' { 0 } else { 1 })
        .collect()
}
