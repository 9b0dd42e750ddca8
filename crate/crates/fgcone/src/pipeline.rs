//! Loading a code and enumerating its minimal pseudo-codewords with the
//! method its size allows.

use std::fs::File;
use std::io::BufReader;
use std::path::Path;

use fgcone_core::cone::adjacency::{orbit_classes, OrbitClass, WalkLimits, MAX_GROUP_ORDER};
use fgcone_core::cone::{enumerate_extreme_rays, ClassSet, FULL_DD_MAX_N};
use fgcone_core::geometry::{automorphism_generators, build_plane, plane_parameters, Ordering, PermutationGroupGens};
use fgcone_core::lincode::{min_distance, DEFAULT_K_LIMIT};
use fgcone_core::{Error as CoreError, Family, ParityCheckMatrix, Plane};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::formats::{read_alist, read_class_records, read_dense};

/// Largest length handled by the symmetric enumeration.
pub const SYMMETRIC_MAX_N: usize = 21;

/// Largest number of classes a list is expanded to in memory.
pub const MAX_EXPANDED_CLASSES: u64 = 8_000_000;

/// A parity-check matrix, with its plane when it was generated.
#[derive(Debug, Clone)]
pub struct Code {
    pub h: ParityCheckMatrix,
    pub plane: Option<Plane>,
}

impl Code {
    /// The incidence matrix of a plane in circulant labeling.
    pub fn generated(family: Family, q: u32) -> Result<Self> {
        let plane = build_plane(family, q)?.with_ordering(Ordering::Circulant);
        Ok(Self { h: plane.incidence(), plane: Some(plane) })
    }

    /// Reads an alist file, or a dense 0/1 matrix when the alist parse
    /// fails and the extension is not `.alist`.
    pub fn from_file(path: &Path) -> Result<Self> {
        let open = || -> Result<BufReader<File>> { Ok(BufReader::new(File::open(path)?)) };
        let is_alist = path.extension().is_some_and(|e| e == "alist");
        let h = match read_alist(open()?) {
            Ok(h) => h,
            Err(e) if is_alist => return Err(e),
            Err(_) => read_dense(open()?)?,
        };
        Ok(Self { h, plane: None })
    }

    pub fn n(&self) -> usize {
        self.h.n()
    }

    /// Plane family and order, if known.
    pub fn plane_info(&self) -> Option<(Family, u32)> {
        self.plane.as_ref().map(|p| (p.family(), p.q()))
    }

    pub fn pg_order(&self) -> Option<u32> {
        self.plane_info().filter(|(f, _)| *f == Family::Pg).map(|(_, q)| q)
    }

    /// Minimum distance from the plane formula, or by enumerating the code.
    pub fn d_min(&self) -> Result<usize> {
        match self.plane_info() {
            Some((f, q)) => Ok(plane_parameters(f, q)?.d_min),
            None => Ok(min_distance(&self.h)?),
        }
    }

    /// Automorphism generators in the labeling of `h`.
    pub fn automorphisms(&self) -> Option<PermutationGroupGens> {
        self.plane.as_ref().map(automorphism_generators)
    }

    /// Every element of the automorphism group, when it is small enough to
    /// list.
    pub fn group_elements(&self) -> Result<Vec<Vec<usize>>> {
        let gens = self
            .automorphisms()
            .ok_or_else(|| Error::Usage("orbit lists need a generated plane code".into()))?;
        Ok(gens.elements(MAX_GROUP_ORDER)?)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, clap::ValueEnum)]
pub enum Method {
    /// Full DD up to the guard, then the symmetric walk when a
    /// flag-transitive group is known.
    Auto,
    Full,
    Symmetric,
}

#[derive(Debug, Clone)]
pub struct Enumeration {
    pub set: ClassSet,
    pub method: Method,
}

fn guard_message(n: usize) -> String {
    format!(
        "n = {n} is out of range: full DD handles n <= {FULL_DD_MAX_N}, the symmetric walk n <= {SYMMETRIC_MAX_N} \
         with a flag-transitive group; pass --allow-large to try anyway"
    )
}

/// All minimal pseudo-codeword classes of `code`.
pub fn enumerate(code: &Code, method: Method, allow_large: bool) -> Result<Enumeration> {
    let n = code.n();
    let symmetric = || -> Result<Enumeration> {
        let gens = code
            .automorphisms()
            .ok_or_else(|| Error::Usage("the symmetric method needs a generated plane code".into()))?;
        if !gens.is_flag_transitive(&code.h) {
            return Err(CoreError::NotFlagTransitive.into());
        }
        if n > SYMMETRIC_MAX_N && !allow_large {
            return Err(CoreError::SizeGuard(guard_message(n)).into());
        }
        let elements = gens.elements(MAX_GROUP_ORDER)?;
        let (orbits, _) = orbit_classes(&code.h, &gens, WalkLimits::default())?;
        Ok(Enumeration { set: ClassSet::from_orbits(orbits, elements), method: Method::Symmetric })
    };
    let full = |allow: bool| -> Result<Enumeration> {
        let classes = enumerate_extreme_rays(&code.h, allow)?;
        Ok(Enumeration { set: ClassSet::from_classes(classes), method: Method::Full })
    };
    match method {
        Method::Full => {
            if n > FULL_DD_MAX_N && !allow_large {
                return Err(CoreError::SizeGuard(guard_message(n)).into());
            }
            full(allow_large)
        }
        Method::Symmetric => symmetric(),
        Method::Auto if n <= FULL_DD_MAX_N => full(false),
        Method::Auto => {
            let transitive = code.automorphisms().is_some_and(|g| g.is_flag_transitive(&code.h));
            if transitive {
                symmetric()
            } else if allow_large {
                full(true)
            } else {
                Err(CoreError::SizeGuard(guard_message(n)).into())
            }
        }
    }
}

/// Classes from a JSON-lines file, checked against the code. Records with
/// an orbit size are orbit representatives under the plane automorphisms.
pub fn load_classes(code: &Code, path: &Path) -> Result<ClassSet> {
    let records = read_class_records(BufReader::new(File::open(path)?))?;
    let mut reps = Vec::with_capacity(records.len());
    for r in &records {
        let w = fgcone_core::PseudoCodeword::from_integers(&r.vector)?;
        if w.len() != code.n() {
            return Err(CoreError::LengthMismatch { expected: code.n(), found: w.len() }.into());
        }
        reps.push(w);
    }
    if records.iter().all(|r| r.orbit_size.is_none()) {
        return Ok(ClassSet::from_classes(reps));
    }
    let orbits = reps
        .into_iter()
        .zip(&records)
        .map(|(class, r)| {
            let orbit_size = r
                .orbit_size
                .ok_or_else(|| Error::Usage(format!("class {} has no orbit size", r.class_id)))?;
            Ok(OrbitClass { class, orbit_size })
        })
        .collect::<Result<Vec<_>>>()?;
    let set = ClassSet::from_orbits(orbits, code.group_elements()?);
    for (k, r) in records.iter().enumerate() {
        let found = set.orbit(k).len() as u64;
        if Some(found) != r.orbit_size {
            return Err(Error::Usage(format!(
                "class {} claims an orbit of {:?} classes, found {found}",
                r.class_id, r.orbit_size
            )));
        }
    }
    Ok(set)
}

/// Classes from `path` if given, else by enumeration.
pub fn classes_for(code: &Code, path: Option<&Path>, allow_large: bool) -> Result<ClassSet> {
    match path {
        Some(p) => load_classes(code, p),
        None => Ok(enumerate(code, Method::Auto, allow_large)?.set),
    }
}

/// Whether codeword enumeration is feasible for this code.
pub fn codewords_feasible(h: &ParityCheckMatrix) -> bool {
    fgcone_core::lincode::dimension(h) <= DEFAULT_K_LIMIT
}
