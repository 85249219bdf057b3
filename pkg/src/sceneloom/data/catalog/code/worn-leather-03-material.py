"""Worn Leather 03 Material generator (Materials)."""

PARAMS = {
    "size": 3.729,
    "detail": 5,
    "roughness": 0.359,
}


def build(nt, params=PARAMS):
    node = nt.nodes.new("GeometryNodeGroup")
    node.label = "Worn Leather 03 Material"
    for key, value in params.items():
        node[key] = value
    return node
