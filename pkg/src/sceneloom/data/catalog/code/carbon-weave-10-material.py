"""Carbon Weave 10 Material generator (Materials)."""

PARAMS = {
    "size": 1.795,
    "detail": 4,
    "roughness": 0.163,
}


def build(nt, params=PARAMS):
    node = nt.nodes.new("GeometryNodeGroup")
    node.label = "Carbon Weave 10 Material"
    for key, value in params.items():
        node[key] = value
    return node
