"""Carbon Weave 06 Material generator (Materials)."""

PARAMS = {
    "size": 0.32,
    "detail": 1,
    "roughness": 0.195,
}


def build(nt, params=PARAMS):
    node = nt.nodes.new("GeometryNodeGroup")
    node.label = "Carbon Weave 06 Material"
    for key, value in params.items():
        node[key] = value
    return node
