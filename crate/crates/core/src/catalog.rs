//! Built-in distance-regular graphs: explicit families plus parameter sets that
//! are only handled analytically.

use crate::drg::{ClassicalParameters, IntersectionArray};
use crate::family::{FamilyDescriptor, FamilyRegistry};
use crate::graph::Graph;
use crate::Result;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Source {
    /// Built vertex by vertex.
    Family(FamilyDescriptor),
    /// Known only through its classical parameters.
    Classical(ClassicalParameters),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CatalogEntry {
    pub name: String,
    pub source: Source,
    /// Stated intersection array; explicit entries are checked against it.
    pub array: String,
    pub classical: Option<String>,
    pub note: &'static str,
}

impl CatalogEntry {
    pub fn intersection_array(&self) -> Result<IntersectionArray> {
        IntersectionArray::parse(&self.array)
    }

    pub fn classical_parameters(&self) -> Result<Option<ClassicalParameters>> {
        self.classical.as_deref().map(ClassicalParameters::parse).transpose()
    }

    pub fn is_explicit(&self) -> bool {
        matches!(self.source, Source::Family(_))
    }

    pub fn build_graph(&self) -> Option<Result<Graph>> {
        match &self.source {
            Source::Family(d) => Some(FamilyRegistry::default().build(d)),
            Source::Classical(_) => None,
        }
    }
}

fn explicit(desc: &str, array: &str, classical: Option<&str>, note: &'static str) -> CatalogEntry {
    CatalogEntry {
        name: desc.to_string(),
        source: Source::Family(FamilyDescriptor::parse(desc).expect("catalog descriptor")),
        array: array.to_string(),
        classical: classical.map(str::to_string),
        note,
    }
}

fn analytic(name: &str, classical: &str, array: &str, note: &'static str) -> CatalogEntry {
    CatalogEntry {
        name: name.to_string(),
        source: Source::Classical(ClassicalParameters::parse(classical).expect("catalog parameters")),
        array: array.to_string(),
        classical: Some(classical.to_string()),
        note,
    }
}

pub fn catalog() -> Vec<CatalogEntry> {
    vec![
        explicit("cycle:4", "2,1;1,2", None, "4-gon, also H(2,2)"),
        explicit("cycle:5", "2,1;1,1", None, "pentagon"),
        explicit("cycle:6", "2,1,1;1,1,2", None, "hexagon"),
        explicit("cycle:7", "2,1,1;1,1,1", None, "heptagon"),
        explicit("complete:5", "4;1", None, "K_5"),
        explicit("hamming:2,3", "4,2;1,2", Some("2,1,0,2"), "3x3 rook's graph"),
        explicit("hamming:3,2", "3,2,1;1,2,3", Some("3,1,0,1"), "3-cube"),
        explicit("hamming:3,3", "6,4,2;1,2,3", Some("3,1,0,2"), "H(3,3)"),
        explicit("hamming:4,2", "4,3,2,1;1,2,3,4", Some("4,1,0,1"), "4-cube"),
        explicit("hamming:4,3", "8,6,4,2;1,2,3,4", Some("4,1,0,2"), "H(4,3); 81 vertices, above the default order limit"),
        explicit("johnson:5,2", "6,2;1,4", Some("2,1,1,3"), "triangular graph T(5)"),
        explicit("johnson:6,3", "9,4,1;1,4,9", Some("3,1,1,3"), "J(6,3)"),
        explicit("johnson:7,3", "12,6,2;1,4,9", Some("3,1,1,4"), "J(7,3)"),
        explicit("halved_cube:5", "10,3;1,6", Some("2,1,2,5"), "halved 5-cube, complement of the Clebsch graph"),
        explicit("halved_cube:6", "15,6,1;1,6,15", Some("3,1,2,5"), "halved 6-cube"),
        explicit("complete_bipartite:3,3", "3,2;1,3", None, "K_{3,3}"),
        explicit("complete_bipartite:4,4", "4,3;1,4", None, "K_{4,4}"),
        explicit("petersen", "3,2;1,1", None, "Petersen graph"),
        explicit("icosahedron", "5,2,1;1,2,5", None, "icosahedron"),
        analytic("doob-3", "3,1,0,3", "9,6,3;1,2,3", "Doob graphs of diameter 3 share the parameters of H(3,4)"),
        analytic("grassmann-2-6-3", "3,2,2,14", "98,72,32;1,9,49", "Grassmann graph J_2(6,3)"),
        analytic("bilinear-2-3-3", "3,2,1,7", "49,36,16;1,6,28", "bilinear forms graph H_2(3,3)"),
        analytic("dual-polar-c3-2", "3,2,0,2", "14,12,8;1,3,7", "dual polar graph of Sp(6,2)"),
        analytic("hermitian-forms-3-4", "3,-2,-3,7", "21,20,16;1,2,12", "Hermitian forms graph Her(3,4)"),
        analytic("gosset", "3,1,4,9", "27,10,1;1,10,27", "Gosset graph"),
    ]
}

pub fn find(name: &str) -> Option<CatalogEntry> {
    catalog().into_iter().find(|e| e.name == name)
}
