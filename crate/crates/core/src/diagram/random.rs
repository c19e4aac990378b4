//! Random connected plats, for property tests and the generated corpus.

use rand::Rng;

use super::front::elaborate_front;
use super::plat::{Event, PlatWord};

/// Draws a random knotted plat with at most `max_crossings` crossings and
/// at most `max_strands` strands in any slab. Disconnected draws are
/// rejected and redrawn.
pub fn random_plat<R: Rng + ?Sized>(rng: &mut R, max_crossings: usize, max_strands: usize) -> PlatWord {
    let max_strands = max_strands.max(2) & !1;
    loop {
        let target = rng.gen_range(0..=max_crossings);
        let mut events = vec![Event::left(1)];
        let mut count = 2usize;
        let mut crossings = 0usize;
        while crossings < target {
            let roll = rng.gen_range(0..10);
            if roll < 2 && count + 2 <= max_strands {
                events.push(Event::left(rng.gen_range(1..=count + 1)));
                count += 2;
            } else if roll < 3 && count >= 4 {
                events.push(Event::right(rng.gen_range(1..count)));
                count -= 2;
            } else {
                events.push(Event::cross(rng.gen_range(1..count)));
                crossings += 1;
            }
        }
        while count > 0 {
            events.push(Event::right(rng.gen_range(1..count)));
            count -= 2;
        }
        let plat = PlatWord::new(events).expect("generated plats are well formed");
        if elaborate_front(&plat).is_ok() {
            return plat;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn draws_are_connected_and_bounded() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for _ in 0..50 {
            let p = random_plat(&mut rng, 4, 6);
            assert!(p.crossing_count() <= 4);
            assert!(p.strand_counts().iter().all(|&c| c <= 6));
            assert!(elaborate_front(&p).is_ok());
        }
    }
}
