"""Worn Leather 09 Material generator (Materials)."""

PARAMS = {
    "size": 2.344,
    "detail": 5,
    "roughness": 0.789,
}


def build(nt, params=PARAMS):
    node = nt.nodes.new("GeometryNodeGroup")
    node.label = "Worn Leather 09 Material"
    for key, value in params.items():
        node[key] = value
    return node
