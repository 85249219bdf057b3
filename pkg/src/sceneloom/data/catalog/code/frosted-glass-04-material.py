"""Frosted Glass 04 Material generator (Materials)."""

PARAMS = {
    "size": 1.911,
    "detail": 2,
    "roughness": 0.611,
}


def build(nt, params=PARAMS):
    node = nt.nodes.new("GeometryNodeGroup")
    node.label = "Frosted Glass 04 Material"
    for key, value in params.items():
        node[key] = value
    return node
